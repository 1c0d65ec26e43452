//! Path words over {N, E, D} and their unlabeled statistics.
//!
//! A path lives in a grid fixed by its [`PathKind`]; validity means every
//! prefix endpoint stays weakly above the segment from (0,0) to the top
//! right corner. Statistics: area (lower triangles between path and main
//! diagonal), the bounce path and its vector, peaks, numph and the Schroder
//! bounce, touch decompositions and column counts.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A single lattice step. The derived order `D < E < N` is the canonical
/// letter order used by every enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Step {
    D,
    E,
    N,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
            Step::D => 'D',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'N' => Some(Step::N),
            'E' => Some(Step::E),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

/// Ambient grid and step multiset of a path word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    /// `k` east steps and `n - k` north steps, no diagonal condition.
    Rect { n: u32, k: u32 },
    /// `n` north steps, `m*n` east steps, weakly above the diagonal.
    Dyck { n: u32, m: u32 },
    /// `n - d` north, `m*n - d` east and `d` diagonal steps.
    Schroder { n: u32, d: u32, m: u32 },
}

impl PathKind {
    /// (north, east, diagonal) counts demanded by the kind.
    pub fn step_counts(&self) -> (u32, u32, u32) {
        match *self {
            PathKind::Rect { n, k } => (n - k, k, 0),
            PathKind::Dyck { n, m } => (n, m * n, 0),
            PathKind::Schroder { n, d, m } => (n - d, m * n - d, d),
        }
    }

    /// Number of rows (north plus diagonal steps).
    pub fn rows(&self) -> u32 {
        let (n, _, d) = self.step_counts();
        n + d
    }

    fn diagonal_slope(&self) -> Option<u32> {
        match *self {
            PathKind::Rect { .. } => None,
            PathKind::Dyck { m, .. } | PathKind::Schroder { m, .. } => Some(m),
        }
    }
}

/// A validated path word. Serializes as `{"word": "...", "kind": ...}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathWord {
    letters: Vec<Step>,
    kind: PathKind,
}

impl Serialize for PathWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PathWord", 2)?;
        st.serialize_field("word", &self.to_string())?;
        st.serialize_field("kind", &self.kind)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PathWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            word: String,
            kind: PathKind,
        }
        let raw = Raw::deserialize(d)?;
        PathWord::parse(&raw.word, raw.kind).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.letters {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl PathWord {
    pub fn new(letters: Vec<Step>, kind: PathKind) -> Result<PathWord> {
        let (wn, we, wd) = kind.step_counts();
        let cn = letters.iter().filter(|s| **s == Step::N).count() as u32;
        let ce = letters.iter().filter(|s| **s == Step::E).count() as u32;
        let cd = letters.iter().filter(|s| **s == Step::D).count() as u32;
        if (cn, ce, cd) != (wn, we, wd) {
            return Err(Error::WrongStepCounts {
                expected: format!("{}N {}E {}D", wn, we, wd),
                found: format!("{}N {}E {}D", cn, ce, cd),
            });
        }
        if let Some(m) = kind.diagonal_slope() {
            let (mut x, mut y) = (0u64, 0u64);
            for (i, s) in letters.iter().enumerate() {
                match s {
                    Step::N => y += 1,
                    Step::E => x += 1,
                    Step::D => {
                        x += 1;
                        y += 1;
                    }
                }
                // weakly above the segment to (m*n, n): y/n >= x/(m*n)
                if y * (m as u64) < x {
                    return Err(Error::PrefixBelowDiagonal { index: i + 1 });
                }
            }
        }
        Ok(PathWord { letters, kind })
    }

    /// Parse an uppercase N/E/D string against a kind.
    pub fn parse(text: &str, kind: PathKind) -> Result<PathWord> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            match Step::from_char(c) {
                Some(s) => letters.push(s),
                None => {
                    return Err(Error::WrongStepCounts {
                        expected: "letters over {N, E, D}".into(),
                        found: format!("character {:?}", c),
                    })
                }
            }
        }
        PathWord::new(letters, kind)
    }

    pub fn letters(&self) -> &[Step] {
        &self.letters
    }

    pub fn kind(&self) -> PathKind {
        self.kind
    }

    pub fn slope(&self) -> u32 {
        self.kind.diagonal_slope().unwrap_or(1)
    }

    /// Number of rows (N and D steps).
    pub fn rows(&self) -> usize {
        self.letters
            .iter()
            .filter(|s| !matches!(s, Step::E))
            .count()
    }

    /// The kinds of the row steps, bottom to top.
    pub fn row_steps(&self) -> Vec<Step> {
        self.letters
            .iter()
            .copied()
            .filter(|s| !matches!(s, Step::E))
            .collect()
    }

    /// Per-row area `m*(i-1) - x_i` for the step occupying row `i`.
    pub fn row_areas(&self) -> Vec<u64> {
        let m = self.slope() as u64;
        let mut out = Vec::new();
        let mut x = 0u64;
        let mut row = 0u64;
        for s in &self.letters {
            match s {
                Step::E => x += 1,
                Step::N => {
                    out.push(m * row - x);
                    row += 1;
                }
                Step::D => {
                    out.push(m * row - x);
                    row += 1;
                    x += 1;
                }
            }
        }
        out
    }

    /// Number of east-run letters between consecutive row steps; length
    /// `rows - 1`. Trailing east steps are not included.
    pub fn row_gaps(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut seen_row = false;
        let mut cnt = 0u32;
        for s in &self.letters {
            match s {
                Step::E => cnt += 1,
                _ => {
                    if seen_row {
                        out.push(cnt);
                    }
                    seen_row = true;
                    cnt = 0;
                }
            }
        }
        out
    }
}

/// Area of a path: boxes under the path for rectangles, lower triangles
/// between path and main diagonal otherwise.
pub fn area(p: &PathWord) -> u64 {
    match p.kind() {
        PathKind::Rect { .. } => {
            let mut a = 0u64;
            let mut y = 0u64;
            for s in p.letters() {
                match s {
                    Step::N => y += 1,
                    Step::E => a += y,
                    Step::D => unreachable!(),
                }
            }
            a
        }
        _ => p.row_areas().iter().sum(),
    }
}

/// Bounce data of a path: the bounce vector (row indices numbered from the
/// top, origin included), the bounce statistic, the peaks and numph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BounceData {
    pub bounce_vector: Vec<u32>,
    pub bounce: u64,
    pub peaks: Vec<(u64, u64)>,
    pub numph: u64,
}

fn require_square(p: &PathWord) -> Result<()> {
    match p.kind() {
        PathKind::Dyck { m: 1, .. } | PathKind::Schroder { m: 1, .. } => Ok(()),
        _ => Err(Error::NotSchroder(format!(
            "bounce needs an n x n grid, got {:?}",
            p.kind()
        ))),
    }
}

/// North-step count before the (k+1)-th east step, for a D-free word.
fn heights_before_easts(p: &PathWord) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = 0u64;
    for s in p.letters() {
        match s {
            Step::N => n += 1,
            Step::E => out.push(n),
            Step::D => unreachable!("dyck word expected"),
        }
    }
    out
}

/// Bounce turn points of a Dyck word: the bounce path switches from north
/// to east at `(pos, h)`; the east step of the path beginning there has
/// east-index `pos`.
fn bounce_turns(p: &PathWord) -> Vec<(u64, u64)> {
    let n = p.rows() as u64;
    let npos = heights_before_easts(p);
    let mut turns = Vec::new();
    let mut pos = 0u64;
    while pos < n {
        let h = if (pos as usize) < npos.len() {
            npos[pos as usize]
        } else {
            n
        };
        turns.push((pos, h));
        pos = h;
    }
    turns
}

/// Bounce vector and statistic of a square Dyck path.
pub fn bounce_dyck(p: &PathWord) -> Result<BounceData> {
    match p.kind() {
        PathKind::Dyck { m: 1, .. } => {}
        PathKind::Schroder { d: 0, m: 1, .. } => {}
        PathKind::Dyck { n: 0, .. } | PathKind::Schroder { n: 0, .. } => {}
        _ => {
            return Err(Error::NotSchroder(format!(
                "bounce_dyck needs a square Dyck path, got {:?}",
                p.kind()
            )))
        }
    }
    let n = p.rows() as u64;
    let turns = bounce_turns(p);
    // touch heights: origin, each turn's landing column, final corner
    let mut touch_rows: Vec<u32> = vec![n as u32];
    for &(_, h) in &turns {
        touch_rows.push((n - h) as u32);
    }
    touch_rows.sort_unstable();
    let sum: u64 = touch_rows.iter().map(|&r| r as u64).sum();
    let peaks = peak_points(p, &turns);
    Ok(BounceData {
        bounce_vector: touch_rows,
        bounce: sum - n,
        peaks,
        numph: 0,
    })
}

/// Lattice points of the peaks of `p`, found by mapping each bounce turn of
/// `gamma(p)` back onto the corresponding east step of `p`.
fn peak_points(p: &PathWord, gamma_turns: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let targets: std::collections::BTreeSet<u64> = gamma_turns.iter().map(|&(e, _)| e).collect();
    let mut pts = Vec::new();
    let (mut x, mut y) = (0u64, 0u64);
    let mut e_idx = 0u64;
    for s in p.letters() {
        match s {
            Step::E => {
                if targets.contains(&e_idx) {
                    pts.push((x, y));
                }
                e_idx += 1;
                x += 1;
            }
            Step::N => y += 1,
            Step::D => {
                x += 1;
                y += 1;
            }
        }
    }
    pts
}

/// Delete the diagonal steps; the result is a Dyck path.
pub fn gamma(p: &PathWord) -> PathWord {
    let (n, d) = match p.kind() {
        PathKind::Schroder { n, d, .. } => (n, d),
        PathKind::Dyck { n, .. } => (n, 0),
        PathKind::Rect { .. } => panic!("gamma undefined for rectangles"),
    };
    let letters: Vec<Step> = p
        .letters()
        .iter()
        .copied()
        .filter(|s| !matches!(s, Step::D))
        .collect();
    PathWord::new(
        letters,
        PathKind::Dyck {
            n: n - d,
            m: p.slope(),
        },
    )
    .expect("gamma of a valid path is valid")
}

/// Peaks of a Schroder path: every turn of the bounce path of `gamma(p)`,
/// located at the start of the matching east step of `p`.
pub fn peaks(p: &PathWord) -> Result<Vec<(u64, u64)>> {
    require_square(p)?;
    let g = gamma(p);
    Ok(peak_points(p, &bounce_turns(&g)))
}

/// Number of (peak, diagonal step) pairs where the diagonal step's bottom
/// endpoint is at least as high as the peak.
pub fn numph(p: &PathWord) -> Result<u64> {
    require_square(p)?;
    let pts = peaks(p)?;
    let mut d_bottoms = Vec::new();
    let (mut x, mut y) = (0u64, 0u64);
    for s in p.letters() {
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
            Step::D => {
                d_bottoms.push(y);
                x += 1;
                y += 1;
            }
        }
    }
    let _ = x;
    let mut count = 0u64;
    for &(_, h) in &pts {
        count += d_bottoms.iter().filter(|&&b| b >= h).count() as u64;
    }
    Ok(count)
}

/// Full bounce data of a Schroder path: `bounce = bounce(gamma) + numph`.
pub fn bounce_schroder(p: &PathWord) -> Result<BounceData> {
    require_square(p)?;
    let g = gamma(p);
    let base = bounce_dyck(&g)?;
    let nph = numph(p)?;
    Ok(BounceData {
        bounce_vector: base.bounce_vector,
        bounce: base.bounce + nph,
        peaks: peaks(p)?,
        numph: nph,
    })
}

/// Bounce statistic of a square Dyck or Schroder path.
pub fn bounce(p: &PathWord) -> Result<u64> {
    Ok(bounce_schroder(p)?.bounce)
}

/// Factorization at the returns to the main diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TouchDecomposition {
    pub factors: Vec<Vec<Step>>,
    /// Per-factor size `#N + #D`.
    pub sizes: Vec<u32>,
}

/// Maximal factorization into diagonal-returning factors (m = 1 only).
pub fn touch(p: &PathWord) -> Result<TouchDecomposition> {
    require_square(p)?;
    let mut factors = Vec::new();
    let mut cur = Vec::new();
    let (mut x, mut y) = (0u64, 0u64);
    for s in p.letters() {
        cur.push(*s);
        match s {
            Step::N => y += 1,
            Step::E => x += 1,
            Step::D => {
                x += 1;
                y += 1;
            }
        }
        if x == y {
            factors.push(std::mem::take(&mut cur));
        }
    }
    debug_assert!(cur.is_empty());
    let sizes = factors
        .iter()
        .map(|f| f.iter().filter(|s| !matches!(s, Step::E)).count() as u32)
        .collect();
    Ok(TouchDecomposition { factors, sizes })
}

/// Number of maximal `N^j E^k` factors with `j, k >= 1`; a diagonal step
/// terminates any column in progress.
pub fn column_count(p: &PathWord) -> u32 {
    let mut count = 0;
    let mut in_norths = false;
    let mut prev: Option<Step> = None;
    for s in p.letters() {
        match s {
            Step::N => in_norths = true,
            Step::E => {
                if in_norths && prev != Some(Step::E) {
                    count += 1;
                }
                in_norths = false;
            }
            Step::D => in_norths = false,
        }
        prev = Some(*s);
    }
    count
}

/// Hard cap keeping exhaustive enumerations at desk scale.
pub const MAX_ENUM_ROWS: u32 = 16;

/// All valid words of the given kind, in lexicographic order on letters
/// (canonical order `D < E < N`).
pub fn enumerate_paths(kind: PathKind) -> Result<Vec<PathWord>> {
    let (n, e, d) = kind.step_counts();
    if n + d > MAX_ENUM_ROWS || e > 4 * MAX_ENUM_ROWS {
        return Err(Error::LimitExceeded {
            what: format!("{:?}", kind),
            estimate: format!("> {} rows", MAX_ENUM_ROWS),
        });
    }
    let slope = kind.diagonal_slope();
    let mut out = Vec::new();
    let mut word: Vec<Step> = Vec::with_capacity((n + e + d) as usize);
    fn rec(
        word: &mut Vec<Step>,
        x: u64,
        y: u64,
        rem: (u32, u32, u32),
        slope: Option<u32>,
        kind: PathKind,
        out: &mut Vec<PathWord>,
    ) {
        let (rn, re, rd) = rem;
        if rn == 0 && re == 0 && rd == 0 {
            out.push(PathWord {
                letters: word.clone(),
                kind,
            });
            return;
        }
        for s in [Step::D, Step::E, Step::N] {
            let (rn2, re2, rd2, x2, y2) = match s {
                Step::D if rd > 0 => (rn, re, rd - 1, x + 1, y + 1),
                Step::E if re > 0 => (rn, re - 1, rd, x + 1, y),
                Step::N if rn > 0 => (rn - 1, re, rd, x, y + 1),
                _ => continue,
            };
            if let Some(m) = slope {
                if y2 * (m as u64) < x2 {
                    continue;
                }
            }
            word.push(s);
            rec(word, x2, y2, (rn2, re2, rd2), slope, kind, out);
            word.pop();
        }
    }
    rec(&mut word, 0, 0, (n, e, d), slope, kind, &mut out);
    Ok(out)
}

/// The Schroder(n, d, 1) words whose last two letters are N, E.
pub fn enumerate_schroder_tilde(n: u32, d: u32) -> Result<Vec<PathWord>> {
    let all = enumerate_paths(PathKind::Schroder { n, d, m: 1 })?;
    Ok(all
        .into_iter()
        .filter(|p| {
            let l = p.letters();
            l.len() >= 2 && l[l.len() - 2] == Step::N && l[l.len() - 1] == Step::E
        })
        .collect())
}

/// Direct recursion for the number of Schroder(n, d, 1) paths, used as an
/// independent cross-check of the enumerator.
pub fn schroder_count(n: u32, d: u32) -> u64 {
    // walk (x, y) with remaining step budget; memoize on (x, y, used_d)
    fn rec(
        x: u32,
        y: u32,
        used_d: u32,
        n: u32,
        d: u32,
        memo: &mut std::collections::HashMap<(u32, u32, u32), u64>,
    ) -> u64 {
        if x == n && y == n {
            return if used_d == d { 1 } else { 0 };
        }
        if let Some(&v) = memo.get(&(x, y, used_d)) {
            return v;
        }
        let mut total = 0;
        if y < n {
            total += rec(x, y + 1, used_d, n, d, memo);
        }
        if x < y {
            total += rec(x + 1, y, used_d, n, d, memo);
        }
        if used_d < d && x < n && y < n {
            total += rec(x + 1, y + 1, used_d + 1, n, d, memo);
        }
        memo.insert((x, y, used_d), total);
        total
    }
    rec(0, 0, 0, n, d, &mut std::collections::HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sch(text: &str, n: u32, d: u32) -> PathWord {
        PathWord::parse(text, PathKind::Schroder { n, d, m: 1 }).unwrap()
    }

    fn dyck(text: &str, n: u32) -> PathWord {
        PathWord::parse(text, PathKind::Dyck { n, m: 1 }).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert!(PathWord::parse("NDNENNEDDEEDNE", PathKind::Schroder { n: 9, d: 4, m: 1 }).is_ok());
        assert!(PathWord::parse("EENENNNNE", PathKind::Rect { n: 9, k: 4 }).is_ok());
        assert_eq!(
            PathWord::parse("EN", PathKind::Dyck { n: 1, m: 1 }),
            Err(Error::PrefixBelowDiagonal { index: 1 })
        );
        assert!(matches!(
            PathWord::parse("NE", PathKind::Dyck { n: 2, m: 1 }),
            Err(Error::WrongStepCounts { .. })
        ));
    }

    #[test]
    fn area_examples() {
        let r = PathWord::parse("EENENNNNE", PathKind::Rect { n: 9, k: 4 }).unwrap();
        assert_eq!(area(&r), 6);
        let p = sch("NDNENNEDDEEDNE", 9, 4);
        assert_eq!(p.row_areas(), vec![0, 1, 1, 1, 2, 2, 2, 0, 0]);
        assert_eq!(area(&p), 9);
        assert_eq!(area(&dyck("NNENNEEENE", 5)), 4);
    }

    #[test]
    fn bounce_examples() {
        let b = bounce_dyck(&dyck("NNENNEEENE", 5)).unwrap();
        assert_eq!(b.bounce_vector, vec![0, 1, 3, 5]);
        assert_eq!(b.bounce, 4);
        assert_eq!(bounce(&dyck("NNNEEE", 3)).unwrap(), 0);
        assert_eq!(bounce(&dyck("NENENE", 3)).unwrap(), 3);
    }

    #[test]
    fn peaks_examples() {
        // figure marks (1,3) and (5,7); the terminal turn is a peak as well
        assert_eq!(
            peaks(&sch("NDNENNEDDEEDNE", 9, 4)).unwrap(),
            vec![(1, 3), (5, 7), (8, 9)]
        );
        assert_eq!(peaks(&dyck("NENE", 2)).unwrap(), vec![(0, 1), (1, 2)]);
        assert_eq!(peaks(&dyck("NNNEEE", 3)).unwrap(), vec![(0, 3)]);
    }

    #[test]
    fn numph_and_schroder_bounce() {
        let p = sch("NDNENNEDDEEDNE", 9, 4);
        assert_eq!(numph(&p).unwrap(), 4);
        assert_eq!(bounce(&p).unwrap(), 8);
        assert_eq!(numph(&sch("NEDNE", 3, 1)).unwrap(), 1);
        assert_eq!(numph(&dyck("NENENE", 3)).unwrap(), 0);
        assert_eq!(bounce(&sch("DNENE", 3, 1)).unwrap(), 1);
        assert_eq!(bounce(&sch("DD", 2, 2)).unwrap(), 0);
        // the terminal peak pairs with a later diagonal step
        assert_eq!(numph(&sch("NENED", 3, 1)).unwrap(), 2);
    }

    #[test]
    fn touch_examples() {
        let t = touch(&dyck("NNENNEEENE", 5)).unwrap();
        assert_eq!(t.sizes, vec![4, 1]);
        let t = touch(&sch("DDNEDNENE", 6, 3)).unwrap();
        let words: Vec<String> = t
            .factors
            .iter()
            .map(|f| f.iter().map(|s| s.as_char()).collect())
            .collect();
        assert_eq!(words, vec!["D", "D", "NE", "D", "NE", "NE"]);
        assert_eq!(touch(&dyck("NENENE", 3)).unwrap().factors.len(), 3);
    }

    #[test]
    fn column_examples() {
        assert_eq!(column_count(&dyck("NNENNEEENE", 5)), 3);
        assert_eq!(column_count(&dyck("NNNEEE", 3)), 1);
        assert_eq!(column_count(&dyck("NENENE", 3)), 3);
        assert_eq!(column_count(&sch("NNEDNEE", 4, 1)), 2);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_paths(PathKind::Dyck { n: 3, m: 1 }).unwrap().len(),
            5
        );
        let s21: Vec<String> = enumerate_paths(PathKind::Schroder { n: 2, d: 1, m: 1 })
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(s21, vec!["DNE", "NDE", "NED"]);
        assert_eq!(
            enumerate_paths(PathKind::Rect { n: 4, k: 2 }).unwrap().len(),
            6
        );
        // catalan numbers
        for (n, c) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
            assert_eq!(
                enumerate_paths(PathKind::Dyck { n, m: 1 }).unwrap().len(),
                c
            );
        }
        // schroder counts, two independent routes
        for n in 0..=6 {
            for d in 0..=n {
                let by_enum = enumerate_paths(PathKind::Schroder { n, d, m: 1 })
                    .unwrap()
                    .len() as u64;
                assert_eq!(by_enum, schroder_count(n, d), "n={} d={}", n, d);
            }
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        for kind in [
            PathKind::Schroder { n: 4, d: 2, m: 1 },
            PathKind::Dyck { n: 4, m: 2 },
            PathKind::Rect { n: 6, k: 3 },
        ] {
            let all = enumerate_paths(kind).unwrap();
            for w in all.windows(2) {
                assert!(w[0].letters() < w[1].letters());
            }
        }
    }

    #[test]
    fn schroder_tilde_examples() {
        let t20: Vec<String> = enumerate_schroder_tilde(2, 0)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(t20, vec!["NENE"]);
        let t31: Vec<String> = enumerate_schroder_tilde(3, 1)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(t31, vec!["DNENE", "NDENE", "NEDNE"]);
        assert!(enumerate_schroder_tilde(2, 2).unwrap().is_empty());
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(
            enumerate_paths(PathKind::Dyck { n: 40, m: 1 }),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn gamma_examples() {
        let p = sch("NDNENNEDDEEDNE", 9, 4);
        assert_eq!(gamma(&p).to_string(), "NNENNEEENE");
        assert_eq!(gamma(&sch("DD", 2, 2)).to_string(), "");
        let d = dyck("NENE", 2);
        assert_eq!(gamma(&d).to_string(), "NENE");
    }

    #[test]
    fn staircase_and_full_bounce() {
        for n in 1..=6u32 {
            let full: String = "N".repeat(n as usize) + &"E".repeat(n as usize);
            assert_eq!(bounce(&dyck(&full, n)).unwrap(), 0);
            let stair: String = "NE".repeat(n as usize);
            assert_eq!(bounce(&dyck(&stair, n)).unwrap(), (n as u64) * (n as u64 - 1) / 2);
            assert_eq!(column_count(&dyck(&stair, n)), n);
            assert_eq!(column_count(&dyck(&full, n)), 1);
            assert_eq!(touch(&dyck(&stair, n)).unwrap().factors.len(), n as usize);
        }
    }

    #[test]
    fn dyck_area_bounds() {
        for p in enumerate_paths(PathKind::Dyck { n: 5, m: 1 }).unwrap() {
            let a = area(&p);
            assert!(a <= 10);
            assert_eq!(a, p.row_areas().iter().sum::<u64>());
            let b = bounce(&p).unwrap();
            assert_eq!(b == 0, p.to_string() == "NNNNNEEEEE");
        }
    }

    #[test]
    fn gamma_undoes_diagonal_insertion() {
        for base in enumerate_paths(PathKind::Dyck { n: 4, m: 1 }).unwrap() {
            let n = 4u32;
            for pos in 0..=base.letters().len() {
                let mut letters = base.letters().to_vec();
                letters.insert(pos, Step::D);
                if let Ok(w) = PathWord::new(
                    letters,
                    PathKind::Schroder { n: n + 1, d: 1, m: 1 },
                ) {
                    assert_eq!(gamma(&w).letters(), base.letters());
                }
            }
        }
    }

    #[test]
    fn json_shape_matches_interface() {
        let p = sch("NDNENNEDDEEDNE", 9, 4);
        let v = serde_json::to_value(&p).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "word": "NDNENNEDDEEDNE",
                "kind": {"schroder": {"n": 9, "d": 4, "m": 1}},
            })
        );
        let back: PathWord = serde_json::from_value(v).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<PathWord>(
            r#"{"word":"EN","kind":{"dyck":{"n":1,"m":1}}}"#
        )
        .is_err());
    }

    proptest! {
        #[test]
        fn touch_factors_concatenate(idx in 0usize..1000) {
            let all = enumerate_paths(PathKind::Schroder { n: 5, d: 2, m: 1 }).unwrap();
            let p = &all[idx % all.len()];
            let t = touch(p).unwrap();
            let glued: Vec<Step> = t.factors.concat();
            prop_assert_eq!(glued, p.letters().to_vec());
            for f in &t.factors {
                let n = f.iter().filter(|s| matches!(s, Step::N | Step::D)).count();
                let e = f.iter().filter(|s| matches!(s, Step::E | Step::D)).count();
                prop_assert_eq!(n, e);
            }
        }
    }
}
