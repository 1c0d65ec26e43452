//! Standard Young tableaux in French convention (rows listed bottom-up,
//! columns increase upward), their descent sets, major index, conjugation,
//! and the hook-shape/descent-set dictionary.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// An integer partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadShape(format!("{:?} is not a partition", parts)));
        }
        Ok(Partition(parts))
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition(vec![]);
        }
        let m = self.0[0];
        Partition(
            (0..m)
                .map(|c| self.0.iter().filter(|&&p| p > c).count() as u32)
                .collect(),
        )
    }

    pub fn is_hook(&self) -> bool {
        self.0.len() <= 1 || self.0[1..].iter().all(|&p| p == 1)
    }

    /// The hook `(d, 1^{n-d})`.
    pub fn hook(n: u32, d: u32) -> Result<Partition> {
        if d == 0 || d > n {
            return Err(Error::BadShape(format!("hook ({}, 1^{}) invalid", d, n - d)));
        }
        let mut parts = vec![d];
        parts.extend(std::iter::repeat_n(1, (n - d) as usize));
        Partition::new(parts)
    }

    /// All partitions of `n`, parts decreasing, in lexicographically
    /// decreasing order starting from `(n)`.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            let mut p = rem.min(max);
            while p >= 1 {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
                p -= 1;
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Hook-length formula count of standard Young tableaux.
    pub fn syt_count(&self) -> u64 {
        let n = self.size() as u64;
        let mut numerator = 1u128;
        for i in 2..=n as u128 {
            numerator *= i;
        }
        let mut denom = 1u128;
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let arm = (len - c - 1) as u128;
                let leg = self.0[r + 1..].iter().filter(|&&p| p > c).count() as u128;
                denom *= arm + leg + 1;
            }
        }
        (numerator / denom) as u64
    }
}

/// A standard Young tableau; `rows[0]` is the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub shape: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Tableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n as usize + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > n || seen[v as usize] {
                    return Err(Error::BadShape(format!("entries not a permutation of 1..{}", n)));
                }
                seen[v as usize] = true;
            }
        }
        for row in &rows {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::BadShape("rows must strictly increase".into()));
            }
        }
        for r in 1..rows.len() {
            if rows[r].iter().zip(&rows[r - 1]).any(|(hi, lo)| lo >= hi) {
                return Err(Error::BadShape("columns must strictly increase".into()));
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn size(&self) -> u32 {
        self.shape.size()
    }

    /// Row index (0 = bottom) of each entry.
    fn row_of(&self) -> Vec<usize> {
        let n = self.size() as usize;
        let mut out = vec![0usize; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                out[v as usize] = r;
            }
        }
        out
    }

    /// Entries `i` such that `i + 1` lies in a higher row.
    pub fn descents(&self) -> BTreeSet<u32> {
        let rows = self.row_of();
        let n = self.size();
        (1..n).filter(|&i| rows[i as usize + 1] > rows[i as usize]).collect()
    }

    pub fn des(&self) -> u32 {
        self.descents().len() as u32
    }

    pub fn maj(&self) -> u64 {
        self.descents().iter().map(|&i| i as u64).sum()
    }

    /// Reflection through the line x = y; descent sets complement.
    pub fn conjugate(&self) -> Tableau {
        let csh = self.shape.conjugate();
        let rows: Vec<Vec<u32>> = csh
            .parts()
            .iter()
            .enumerate()
            .map(|(c, &len)| (0..len as usize).map(|r| self.rows[r][c]).collect())
            .collect();
        Tableau {
            shape: csh,
            rows,
        }
    }

    /// Word reading the rows bottom-up, left to right; used as the canonical
    /// sort key for enumerations.
    pub fn reading_key(&self) -> Vec<u32> {
        self.rows.concat()
    }
}

/// All standard Young tableaux of the given shape in row-reading
/// lexicographic order.
pub fn enumerate_syt(shape: &Partition) -> Vec<Tableau> {
    let nrows = shape.parts().len();
    let n = shape.size();
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    let mut out = Vec::new();
    fn rec(k: u32, n: u32, shape: &[u32], rows: &mut Vec<Vec<u32>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau {
                shape: Partition(shape.to_vec()),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..rows.len() {
            let c = rows[r].len();
            if c >= shape[r] as usize {
                continue;
            }
            if r > 0 && rows[r - 1].len() <= c {
                continue;
            }
            rows[r].push(k);
            rec(k + 1, n, shape, rows, out);
            rows[r].pop();
        }
    }
    rec(1, n, shape.parts(), &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_key());
    out
}

/// Descent set, cardinality and major index.
pub fn descent_data(t: &Tableau) -> (BTreeSet<u32>, u32, u64) {
    let d = t.descents();
    let des = d.len() as u32;
    let maj = d.iter().map(|&i| i as u64).sum();
    (d, des, maj)
}

/// The unique standard Young tableau of hook shape `(d, 1^{n-d})` with the
/// given descent set.
pub fn hook_from_descents(n: u32, d: u32, descents: &BTreeSet<u32>) -> Result<Tableau> {
    if descents.len() as u32 != n - d {
        return Err(Error::BadCardinality {
            expected: (n - d) as usize,
            found: descents.len(),
        });
    }
    if descents.iter().any(|&i| i == 0 || i >= n) {
        return Err(Error::OutOfRange("descents must lie in 1..n".into()));
    }
    // the first column above the corner holds {i+1 : i in descents}
    let col: Vec<u32> = descents.iter().map(|&i| i + 1).collect();
    let row: Vec<u32> = (1..=n).filter(|v| *v != 1 && !col.contains(v)).collect();
    let mut rows = vec![[vec![1u32], row].concat()];
    for v in col {
        rows.push(vec![v]);
    }
    Tableau::new(rows)
}
