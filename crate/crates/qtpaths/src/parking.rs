//! Parking functions: labeled (n, mn)-Dyck paths, reading words, the
//! diagonal inversion statistic, the Schroder correspondence, and the
//! structural criteria characterizing dinv 0 and dinv 1.

use crate::pathcore::{enumerate_paths, PathKind, PathWord, Step};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A labeled Dyck path. Labels are written bottom row to top row and must
/// increase upward within each column (maximal north run). Serializes as
/// `{"path": "NENE", "labels": [2, 1], "m": 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingFunction {
    path: PathWord,
    labels: Vec<u32>,
}

impl Serialize for ParkingFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ParkingFunction", 3)?;
        st.serialize_field("path", &self.path.to_string())?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("m", &self.m())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ParkingFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            path: String,
            labels: Vec<u32>,
            #[serde(default = "one")]
            m: u32,
        }
        fn one() -> u32 {
            1
        }
        let raw = Raw::deserialize(d)?;
        let n = raw.labels.len() as u32;
        let path = PathWord::parse(&raw.path, PathKind::Dyck { n, m: raw.m })
            .map_err(serde::de::Error::custom)?;
        ParkingFunction::new(path, raw.labels).map_err(serde::de::Error::custom)
    }
}

impl ParkingFunction {
    pub fn new(path: PathWord, labels: Vec<u32>) -> Result<ParkingFunction> {
        let (n, _m) = match path.kind() {
            PathKind::Dyck { n, m } => (n, m),
            k => {
                return Err(Error::WrongStepCounts {
                    expected: "a Dyck path".into(),
                    found: format!("{:?}", k),
                })
            }
        };
        if labels.len() as u32 != n {
            return Err(Error::WrongStepCounts {
                expected: format!("{} labels", n),
                found: format!("{} labels", labels.len()),
            });
        }
        let mut seen = vec![false; n as usize + 1];
        for &l in &labels {
            if l == 0 || l > n || seen[l as usize] {
                return Err(Error::WrongStepCounts {
                    expected: format!("a permutation of 1..{}", n),
                    found: format!("{:?}", labels),
                });
            }
            seen[l as usize] = true;
        }
        // no descent inside a column
        let mut row = 0usize;
        let mut run_start = 0usize;
        let mut prev_was_north = false;
        for s in path.letters() {
            match s {
                Step::N => {
                    if !prev_was_north {
                        run_start = row;
                    }
                    if row > run_start && labels[row - 1] > labels[row] {
                        return Err(Error::ColumnDescent {
                            lower_row: row,     // 1-based row of the lower label
                            upper_row: row + 1, // and of the offending upper one
                            lower_label: labels[row - 1],
                            upper_label: labels[row],
                        });
                    }
                    row += 1;
                    prev_was_north = true;
                }
                _ => prev_was_north = false,
            }
        }
        Ok(ParkingFunction { path, labels })
    }

    pub fn path(&self) -> &PathWord {
        &self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn n(&self) -> u32 {
        self.labels.len() as u32
    }

    pub fn m(&self) -> u32 {
        self.path.slope()
    }

    pub fn area(&self) -> u64 {
        crate::pathcore::area(&self.path)
    }
}

/// Rows (0-based) in reading order: diagonals farthest from the main
/// diagonal first, each diagonal read top to bottom.
pub fn reading_row_order(path: &PathWord) -> Vec<usize> {
    let areas = path.row_areas();
    let mut rows: Vec<usize> = (0..areas.len()).collect();
    rows.sort_by(|&a, &b| areas[b].cmp(&areas[a]).then(b.cmp(&a)));
    rows
}

/// Labels read along diagonals, farthest first, top-right to bottom-left.
pub fn reading_word(pf: &ParkingFunction) -> Vec<u32> {
    reading_row_order(pf.path())
        .into_iter()
        .map(|r| pf.labels()[r])
        .collect()
}

/// Per-pair dinv contributions and their total.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DinvTable {
    /// (i, j) with i < j (1-based rows) mapped to d_i(j), zeros omitted.
    pub contributions: BTreeMap<(u32, u32), u64>,
    pub total: u64,
}

fn dinv_from_rows(areas: &[u64], labels: &[u32], m: u64) -> DinvTable {
    let n = areas.len();
    let mut contributions = BTreeMap::new();
    let mut total = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            let diff = areas[i].abs_diff(areas[j]);
            let c = if labels[i] < labels[j] {
                m.saturating_sub(diff)
            } else if labels[i] > labels[j] {
                // |a_j - a_i + 1|
                let shifted = (areas[j] as i64 - areas[i] as i64 + 1).unsigned_abs();
                m.saturating_sub(shifted)
            } else {
                0
            };
            if c > 0 {
                contributions.insert((i as u32 + 1, j as u32 + 1), c);
                total += c;
            }
        }
    }
    DinvTable {
        contributions,
        total,
    }
}

/// The diagonal inversion statistic.
pub fn dinv(pf: &ParkingFunction) -> DinvTable {
    dinv_from_rows(&pf.path().row_areas(), pf.labels(), pf.m() as u64)
}

/// dinv computed on the m-fold repeated path with repeated labels; always
/// equals `dinv`.
pub fn dinv_expanded(pf: &ParkingFunction) -> DinvTable {
    let m = pf.m() as usize;
    let mut letters = Vec::new();
    for s in pf.path().letters() {
        match s {
            Step::N => letters.extend(std::iter::repeat_n(Step::N, m)),
            s => letters.push(*s),
        }
    }
    let expanded = PathWord::new(
        letters,
        PathKind::Dyck {
            n: pf.n() * pf.m(),
            m: 1,
        },
    )
    .expect("expanded path is a valid square Dyck path");
    let labels: Vec<u32> = pf
        .labels()
        .iter()
        .flat_map(|&l| std::iter::repeat_n(l, m))
        .collect();
    dinv_from_rows(&expanded.row_areas(), &labels, 1)
}

/// All parking functions on (n, mn)-Dyck paths, paths in canonical order and
/// labelings in lexicographic order within each path.
pub fn enumerate_parking(n: u32, m: u32) -> Result<Vec<ParkingFunction>> {
    let paths = enumerate_paths(PathKind::Dyck { n, m })?;
    let mut out = Vec::new();
    for path in paths {
        let runs = north_runs(&path);
        let mut labels = vec![0u32; n as usize];
        let mut used = vec![false; n as usize + 1];
        rec_labels(&runs, 0, &mut labels, &mut used, &path, &mut out);
    }
    Ok(out)
}

fn north_runs(path: &PathWord) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut row = 0usize;
    let mut start: Option<usize> = None;
    for s in path.letters() {
        match s {
            Step::N => {
                if start.is_none() {
                    start = Some(row);
                }
                row += 1;
            }
            _ => {
                if let Some(st) = start.take() {
                    runs.push((st, row));
                }
            }
        }
    }
    if let Some(st) = start {
        runs.push((st, row));
    }
    runs
}

fn rec_labels(
    runs: &[(usize, usize)],
    row: usize,
    labels: &mut Vec<u32>,
    used: &mut Vec<bool>,
    path: &PathWord,
    out: &mut Vec<ParkingFunction>,
) {
    let n = labels.len();
    if row == n {
        out.push(ParkingFunction {
            path: path.clone(),
            labels: labels.clone(),
        });
        return;
    }
    let run = runs.iter().find(|&&(s, e)| s <= row && row < e).unwrap();
    let floor = if row > run.0 { labels[row - 1] } else { 0 };
    for l in (floor + 1)..=(n as u32) {
        if !used[l as usize] {
            used[l as usize] = true;
            labels[row] = l;
            rec_labels(runs, row + 1, labels, used, path, out);
            used[l as usize] = false;
        }
    }
    labels[row] = 0;
}

/// Replace each diagonal step by NE and attach the canonical labels: rows
/// born from D steps take the big labels n-d+1..n ascending in reading
/// order, the rest take n-d..1 descending in reading order.
pub fn schroder_to_parking(p: &PathWord) -> Result<ParkingFunction> {
    let (n, d, m) = match p.kind() {
        PathKind::Schroder { n, d, m } => (n, d, m),
        PathKind::Dyck { n, m } => (n, 0, m),
        k => {
            return Err(Error::NotSchroder(format!("{:?}", k)));
        }
    };
    let mut letters = Vec::new();
    let mut from_d = Vec::new();
    for s in p.letters() {
        match s {
            Step::N => {
                letters.push(Step::N);
                from_d.push(false);
            }
            Step::E => letters.push(Step::E),
            Step::D => {
                letters.push(Step::N);
                letters.push(Step::E);
                from_d.push(true);
            }
        }
    }
    let path = PathWord::new(letters, PathKind::Dyck { n, m })?;
    let order = reading_row_order(&path);
    let mut labels = vec![0u32; n as usize];
    let mut big = n - d + 1;
    let mut small = n - d;
    for &r in &order {
        if from_d[r] {
            labels[r] = big;
            big += 1;
        }
    }
    for &r in &order {
        if !from_d[r] {
            labels[r] = small;
            small -= 1;
        }
    }
    ParkingFunction::new(path, labels)
}

/// Big-label rows become D steps again; requires the reading word to be a
/// shuffle of the ascending big word and the descending small word, with
/// each big-labeled north step followed by an east step.
pub fn parking_to_schroder(pf: &ParkingFunction, d: u32) -> Result<PathWord> {
    let n = pf.n();
    if d > n {
        return Err(Error::OutOfRange(format!("d = {} > n = {}", d, n)));
    }
    let big_min = n - d + 1;
    let rw = reading_word(pf);
    let bigs: Vec<u32> = rw.iter().copied().filter(|&x| x >= big_min).collect();
    let smalls: Vec<u32> = rw.iter().copied().filter(|&x| x < big_min).collect();
    if !bigs.windows(2).all(|w| w[0] < w[1]) || !smalls.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::NotShuffleForm { d });
    }
    let mut letters = Vec::new();
    let mut row = 0usize;
    let mut iter = pf.path().letters().iter().peekable();
    while let Some(s) = iter.next() {
        match s {
            Step::N => {
                if pf.labels()[row] >= big_min {
                    match iter.peek() {
                        Some(Step::E) => {
                            iter.next();
                            letters.push(Step::D);
                        }
                        _ => return Err(Error::NotShuffleForm { d }),
                    }
                } else {
                    letters.push(Step::N);
                }
                row += 1;
            }
            Step::E => letters.push(Step::E),
            Step::D => unreachable!(),
        }
    }
    PathWord::new(
        letters,
        PathKind::Schroder {
            n,
            d,
            m: pf.m(),
        },
    )
}

fn perm_descents(labels: &[u32]) -> Vec<u32> {
    (1..labels.len() as u32)
        .filter(|&i| labels[i as usize - 1] > labels[i as usize])
        .collect()
}

/// 1-based lines containing an east step (the last line always does).
fn east_lines(pf: &ParkingFunction) -> Vec<u32> {
    let gaps = pf.path().row_gaps();
    let mut out: Vec<u32> = gaps
        .iter()
        .enumerate()
        .filter(|&(_, &g)| g > 0)
        .map(|(i, _)| i as u32 + 1)
        .collect();
    out.push(pf.n());
    out
}

/// True iff the three structural conditions characterizing dinv = 0 hold:
/// at most one east step between consecutive norths, east lines (except the
/// last) exactly the descents of the labels, and the reading word equal to
/// the reversed labels.
pub fn dinv_zero_criterion(pf: &ParkingFunction) -> bool {
    let gaps = pf.path().row_gaps();
    if gaps.iter().any(|&g| g > 1) {
        return false;
    }
    let n = pf.n();
    let east: Vec<u32> = east_lines(pf).into_iter().filter(|&i| i != n).collect();
    if east != perm_descents(pf.labels()) {
        return false;
    }
    let mut rev = pf.labels().to_vec();
    rev.reverse();
    reading_word(pf) == rev
}

/// Labels that make the reading word the decreasing word n..1 (the
/// unlabeled-path convention).
pub fn is_decreasing_reading(pf: &ParkingFunction) -> bool {
    let rw = reading_word(pf);
    rw.windows(2).all(|w| w[0] > w[1])
}

/// The two-bullet criterion used for dinv = 1 when m >= 2: either every
/// north gap is at most one and the column count exceeds the descent count
/// by two, or exactly one gap equals two and it exceeds by one.
fn two_bullet_criterion(pf: &ParkingFunction) -> bool {
    let gaps = pf.path().row_gaps();
    let t = crate::pathcore::column_count(pf.path());
    let des = perm_descents(pf.labels()).len() as u32;
    if gaps.iter().all(|&g| g <= 1) && t == des + 2 {
        return true;
    }
    let twos = gaps.iter().filter(|&&g| g == 2).count();
    if twos == 1 && gaps.iter().all(|&g| g <= 2) && t == des + 1 {
        return true;
    }
    false
}

/// For which d the labels are the canonical Schroder labeling. Returns the
/// smallest such d.
pub fn schroder_form_d(pf: &ParkingFunction) -> Option<u32> {
    (0..=pf.n()).find(|&d| parking_to_schroder(pf, d).is_ok())
}

/// Structural criterion for dinv = 1, dispatched by domain:
/// m >= 2 labeled paths, m = 1 canonical Schroder labelings (any d), and
/// decreasing-reading-word (unlabeled) paths for any m. Other m = 1
/// labelings are unsupported.
pub fn dinv_one_criterion(pf: &ParkingFunction) -> Result<bool> {
    if pf.m() >= 2 {
        return Ok(two_bullet_criterion(pf));
    }
    if is_decreasing_reading(pf) {
        // m = 1 unlabeled: a gap of two always contributes at least two
        // inversions, so only the first bullet can hold
        let gaps = pf.path().row_gaps();
        let t = crate::pathcore::column_count(pf.path());
        let des = perm_descents(pf.labels()).len() as u32;
        return Ok(gaps.iter().all(|&g| g <= 1) && t == des + 2);
    }
    match schroder_form_d(pf) {
        Some(d) => {
            let word = parking_to_schroder(pf, d)?;
            Ok(schroder_word_dinv_one(&word))
        }
        None => Err(Error::DomainUnsupported),
    }
}

/// Word-structural test for dinv = 1 on a Schroder word carrying its
/// canonical labels: the east runs between consecutive row steps must have
/// exactly one nonzero entry, which either sits at the very top with a
/// diagonal step on the last row, or is a single east step between two
/// north steps.
pub fn schroder_word_dinv_one(word: &PathWord) -> bool {
    let gaps = word.row_gaps();
    let kinds = word.row_steps();
    let n = kinds.len();
    let nonzero: Vec<(usize, u32)> = gaps
        .iter()
        .enumerate()
        .filter(|&(_, &g)| g > 0)
        .map(|(i, &g)| (i, g))
        .collect();
    if nonzero.len() != 1 {
        return false;
    }
    let (i, p) = nonzero[0]; // gap between rows i+1 and i+2 (1-based)
    if i + 2 == n {
        kinds[n - 1] == Step::D || (p == 1 && kinds[i] == Step::N)
    } else {
        p == 1 && kinds[i] == Step::N && kinds[i + 1] == Step::N
    }
}

/// `m*binom(n,2) - des(w)*n + maj(w)`; equals the area whenever dinv = 0.
pub fn area_from_maj(pf: &ParkingFunction) -> Result<u64> {
    let total = dinv(pf).total;
    if total != 0 {
        return Err(Error::PreconditionFailed { dinv: total });
    }
    let n = pf.n() as i64;
    let m = pf.m() as i64;
    let des = perm_descents(pf.labels());
    let maj: i64 = des.iter().map(|&i| i as i64).sum();
    let v = m * n * (n - 1) / 2 - (des.len() as i64) * n + maj;
    Ok(v as u64)
}
