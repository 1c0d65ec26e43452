//! Exact sparse polynomials in q and t, two-variable Schur polynomials,
//! Gaussian binomials, the fundamental-quasisymmetric bookkeeping behind the
//! brute-force nabla oracle, and restriction operators on Schur expansions.

use crate::parking::{enumerate_parking, reading_word, ParkingFunction};
use crate::pathcore::{enumerate_schroder_tilde, PathKind, Step};
use crate::tableaux::{enumerate_syt, Partition};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

/// A monomial exponent pair, ordered by total degree then q-exponent so that
/// iteration over a polynomial is canonical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mono {
    pub q: u32,
    pub t: u32,
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // total degree ascending, then q-exponent descending
        (self.q + self.t, other.q).cmp(&(other.q + other.t, self.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse integer polynomial in q and t; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QtPolynomial {
    terms: BTreeMap<Mono, i64>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(q: u32, t: u32, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Mono { q, t }, c);
        }
        QtPolynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q: u32, t: u32) -> i64 {
        self.terms.get(&Mono { q, t }).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(Mono { q, t }).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&Mono { q, t });
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono, i64)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn swap_qt(&self) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.t, m.q, c);
        }
        out
    }

    pub fn eval_q0(&self) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (m, c) in self.terms() {
            if m.q == 0 {
                out.add_term(0, m.t, c);
            }
        }
        out
    }

    pub fn eval_t0(&self) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (m, c) in self.terms() {
            if m.t == 0 {
                out.add_term(m.q, 0, c);
            }
        }
        out
    }

    pub fn eval_one_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: i64) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.q, m.t, c * k);
        }
        out
    }

    pub fn shift(&self, dq: u32, dt: u32) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (m, c) in self.terms() {
            out.add_term(m.q + dq, m.t + dt, c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }

    /// Canonical JSON form: [[q, t, c], ...] in canonical term order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(m, c)| serde_json::json!([m.q, m.t, c]))
                .collect(),
        )
    }
}

impl Add<&QtPolynomial> for &QtPolynomial {
    type Output = QtPolynomial;
    fn add(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.q, m.t, c);
        }
        out
    }
}

impl Mul<&QtPolynomial> for &QtPolynomial {
    type Output = QtPolynomial;
    fn mul(self, rhs: &QtPolynomial) -> QtPolynomial {
        let mut out = QtPolynomial::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a.q + b.q, a.t + b.t, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            } else {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            }
            let a = c.abs();
            let mut vars = String::new();
            match m.q {
                0 => {}
                1 => vars.push('q'),
                e => vars.push_str(&format!("q^{}", e)),
            }
            match m.t {
                0 => {}
                1 => {
                    if !vars.is_empty() {
                        vars.push(' ');
                    }
                    vars.push('t');
                }
                e => {
                    if !vars.is_empty() {
                        vars.push(' ');
                    }
                    vars.push_str(&format!("t^{}", e));
                }
            }
            if vars.is_empty() {
                write!(f, "{}", a)?;
            } else if a == 1 {
                write!(f, "{}", vars)?;
            } else {
                write!(f, "{} {}", a, vars)?;
            }
        }
        Ok(())
    }
}

/// Gaussian binomial `[n k]_q` as a polynomial in q alone.
pub fn gaussian_binomial(n: u32, k: u32) -> QtPolynomial {
    if k > n {
        return QtPolynomial::zero();
    }
    // Pascal recursion [n k] = [n-1 k-1] + q^k [n-1 k]
    let mut row: Vec<QtPolynomial> = vec![QtPolynomial::one()];
    for nn in 1..=n {
        let mut next = Vec::with_capacity(nn as usize + 1);
        for kk in 0..=nn {
            let mut p = QtPolynomial::zero();
            if kk >= 1 {
                p = &p + &row[kk as usize - 1];
            }
            if kk < nn {
                p = &p + &row[kk as usize].shift(kk, 0);
            }
            if kk == 0 {
                p = QtPolynomial::one();
            }
            next.push(p);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// The two-variable Schur polynomial `s_{a,b}(q,t) = (qt)^b h_{a-b}(q,t)`.
pub fn schur_qt(a: u32, b: u32) -> Result<QtPolynomial> {
    if a < b {
        return Err(Error::BadShape(format!("s_{{{},{}}} needs a >= b", a, b)));
    }
    let mut p = QtPolynomial::zero();
    for i in 0..=(a - b) {
        p.add_term(b + i, b + (a - b - i), 1);
    }
    Ok(p)
}

/// Coefficients of a Schur expansion in the s_{a,b}(q,t) basis.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SchurQtExpansion {
    pub coeffs: BTreeMap<(u32, u32), i64>,
}

impl SchurQtExpansion {
    pub fn reconstruct(&self) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        for (&(a, b), &c) in &self.coeffs {
            p = &p + &schur_qt(a, b).expect("stored shapes are valid").scale(c);
        }
        p
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|(&(a, b), &c)| serde_json::json!([[a, b], c]))
                .collect(),
        )
    }
}

impl fmt::Display for SchurQtExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), &c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c != 1 {
                write!(f, "{}*", c)?;
            }
            if b == 0 {
                write!(f, "s[{}]", a)?;
            } else {
                write!(f, "s[{},{}]", a, b)?;
            }
        }
        Ok(())
    }
}

/// Expand a q,t-symmetric polynomial over the s_{a,b}(q,t) basis by
/// triangular inversion: `c_{a,b} = [q^a t^b] - [q^{a+1} t^{b-1}]`.
/// Negative coefficients are reported, not rejected.
pub fn schur_decompose(p: &QtPolynomial) -> Result<SchurQtExpansion> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut coeffs = BTreeMap::new();
    let degrees: std::collections::BTreeSet<u32> = p.terms().map(|(m, _)| m.q + m.t).collect();
    for deg in degrees {
        for b in 0..=(deg / 2) {
            let a = deg - b;
            let c = p.coeff(a, b) - if b > 0 { p.coeff(a + 1, b - 1) } else { 0 };
            if c != 0 {
                coeffs.insert((a, b), c);
            }
        }
    }
    let e = SchurQtExpansion { coeffs };
    debug_assert_eq!(&e.reconstruct(), p);
    Ok(e)
}

/// Which Schur shapes to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Restriction {
    OnePart,
    Hooks,
    PureHooks,
}

/// Keep (a,0) for one-part, (a,0) and (a,1) for hooks, only (a,1) with
/// a >= 1 for pure hooks.
pub fn restrict(e: &SchurQtExpansion, which: Restriction) -> SchurQtExpansion {
    let coeffs = e
        .coeffs
        .iter()
        .filter(|&(&(a, b), _)| match which {
            Restriction::OnePart => b == 0,
            Restriction::Hooks => b <= 1,
            Restriction::PureHooks => b == 1 && a >= 1,
        })
        .map(|(&k, &v)| (k, v))
        .collect();
    SchurQtExpansion { coeffs }
}

/// Generating function over Schroder(n, d, 1), optionally restricted to the
/// words whose last two letters are N, E.
pub fn sch_generating(n: u32, d: u32, ending_ne: bool) -> Result<QtPolynomial> {
    let words = if ending_ne {
        enumerate_schroder_tilde(n, d)?
    } else {
        crate::pathcore::enumerate_paths(PathKind::Schroder { n, d, m: 1 })?
    };
    let mut p = QtPolynomial::zero();
    for w in &words {
        p.add_term(
            crate::pathcore::bounce(w)? as u32,
            crate::pathcore::area(w) as u32,
            1,
        );
    }
    Ok(p)
}

// ---------- compositions and the fundamental expansion ----------

/// Composition of n encoded by the gaps of a subset of {1..n-1}.
pub fn composition_of_set(set: &[u32], n: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set {
        out.push(s - prev);
        prev = s;
    }
    out.push(n - prev);
    out
}

fn descent_set_of_word(w: &[u32]) -> Vec<u32> {
    (1..w.len() as u32)
        .filter(|&i| w[i as usize - 1] > w[i as usize])
        .collect()
}

fn inverse_permutation(w: &[u32]) -> Vec<u32> {
    let mut inv = vec![0u32; w.len()];
    for (i, &v) in w.iter().enumerate() {
        inv[v as usize - 1] = i as u32 + 1;
    }
    inv
}

/// A sum of fundamental quasisymmetric functions with q,t coefficients,
/// keyed by composition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QsymExpansion {
    pub terms: BTreeMap<Vec<u32>, QtPolynomial>,
}

/// A Schur-function expansion in the X variables with q,t coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchurXExpansion {
    pub coeffs: BTreeMap<Partition, QtPolynomial>,
}

impl SchurXExpansion {
    pub fn coeff(&self, shape: &Partition) -> QtPolynomial {
        self.coeffs.get(shape).cloned().unwrap_or_default()
    }
}

/// Accumulate `sum over parking functions of q^dinv t^area F_{co(Des(inv(read)))}`.
pub fn fundamental_expansion(n: u32, m: u32) -> Result<QsymExpansion> {
    let mut out = QsymExpansion::default();
    for pf in enumerate_parking(n, m)? {
        let rd = reading_word(&pf);
        let comp = composition_of_set(&descent_set_of_word(&inverse_permutation(&rd)), n);
        let q = crate::parking::dinv(&pf).total as u32;
        let t = pf.area() as u32;
        out.terms.entry(comp).or_default().add_term(q, t, 1);
    }
    Ok(out)
}

/// Default size limits for the oracle, per m.
pub fn oracle_limit(m: u32) -> u32 {
    match m {
        0 | 1 => 7,
        2 => 5,
        _ => 4,
    }
}

// Exact rational scalar for the unitriangular solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Rat {
    num: i128,
    den: i128,
}

impl Rat {
    fn new(num: i128, den: i128) -> Rat {
        debug_assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let sign = if den < 0 { -1 } else { 1 };
        if g == 0 {
            return Rat { num: 0, den: 1 };
        }
        Rat {
            num: sign * num / g,
            den: sign * den / g,
        }
    }
    fn from_int(v: i64) -> Rat {
        Rat {
            num: v as i128,
            den: 1,
        }
    }
    fn is_zero(self) -> bool {
        self.num == 0
    }
    fn sub(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    fn mul(self, o: Rat) -> Rat {
        Rat::new(self.num * o.num, self.den * o.den)
    }
    fn div(self, o: Rat) -> Rat {
        Rat::new(self.num * o.den, self.den * o.num)
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Expand the parking-function sum for nabla^m(e_n) in the Schur basis by
/// solving the descent-composition system `A x = b` exactly; the residual
/// must vanish on every composition row.
pub fn nabla_oracle(n: u32, m: u32) -> Result<SchurXExpansion> {
    nabla_oracle_with_limit(n, m, oracle_limit(m))
}

pub fn nabla_oracle_with_limit(n: u32, m: u32, limit: u32) -> Result<SchurXExpansion> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: format!("nabla oracle n = {}, m = {}", n, m),
            estimate: format!("{}^{} parking functions", m * n + 1, n.saturating_sub(1)),
        });
    }
    let f = fundamental_expansion(n, m)?;
    schur_x_from_fundamental(n, &f)
}

/// Solve for Schur coefficients from a fundamental expansion.
pub fn schur_x_from_fundamental(n: u32, f: &QsymExpansion) -> Result<SchurXExpansion> {
    let parts = Partition::all(n);
    // all compositions of n, canonical order
    let mut comps: Vec<Vec<u32>> = Vec::new();
    let n1 = n.saturating_sub(1);
    for mask in 0..(1u64 << n1) {
        let set: Vec<u32> = (1..=n1).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        comps.push(composition_of_set(&set, n));
    }
    comps.sort();
    comps.dedup();
    let cidx: BTreeMap<&[u32], usize> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_slice(), i))
        .collect();

    let nr = comps.len();
    let nc = parts.len();
    let mut a = vec![vec![0i64; nc]; nr];
    for (j, shape) in parts.iter().enumerate() {
        for t in enumerate_syt(shape) {
            let set: Vec<u32> = t.descents().into_iter().collect();
            let comp = composition_of_set(&set, n);
            a[cidx[comp.as_slice()]][j] += 1;
        }
    }

    // right-hand side per monomial
    let mut monos: std::collections::BTreeSet<Mono> = std::collections::BTreeSet::new();
    for p in f.terms.values() {
        monos.extend(p.terms().map(|(mo, _)| mo));
    }
    let monos: Vec<Mono> = monos.into_iter().collect();
    let mut b: Vec<Vec<Rat>> = vec![vec![Rat::from_int(0); monos.len()]; nr];
    for (comp, p) in &f.terms {
        let r = cidx[comp.as_slice()];
        for (k, mo) in monos.iter().enumerate() {
            b[r][k] = Rat::from_int(p.coeff(mo.q, mo.t));
        }
    }

    // rational gaussian elimination with full row reduction
    let mut mat: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_int(v)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..nc {
        let piv = (r..nr).find(|&rr| !mat[rr][c].is_zero());
        let piv = piv.ok_or(Error::NonZeroResidual)?;
        mat.swap(r, piv);
        b.swap(r, piv);
        let pivot_row = mat[r].clone();
        let pivot_b = b[r].clone();
        for rr in 0..nr {
            if rr != r && !mat[rr][c].is_zero() {
                let f = mat[rr][c].div(pivot_row[c]);
                for (x, p) in mat[rr].iter_mut().zip(&pivot_row) {
                    *x = x.sub(f.mul(*p));
                }
                for (x, p) in b[rr].iter_mut().zip(&pivot_b) {
                    *x = x.sub(f.mul(*p));
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    // residual: all remaining rows must vanish
    if b[r..].iter().flatten().any(|v| !v.is_zero()) {
        return Err(Error::NonZeroResidual);
    }
    let mut out = SchurXExpansion::default();
    for &(pr, pc) in &pivots {
        let mut poly = QtPolynomial::zero();
        for (k, mo) in monos.iter().enumerate() {
            let v = b[pr][k].div(mat[pr][pc]);
            if v.den != 1 {
                return Err(Error::NonZeroResidual);
            }
            poly.add_term(mo.q, mo.t, v.num as i64);
        }
        if !poly.is_zero() {
            out.coeffs.insert(parts[pc].clone(), poly);
        }
    }
    // certify: A x = b exactly on every row
    for (rr, comp) in comps.iter().enumerate() {
        let mut acc = QtPolynomial::zero();
        for (j, shape) in parts.iter().enumerate() {
            if a[rr][j] != 0 {
                if let Some(p) = out.coeffs.get(shape) {
                    acc = &acc + &p.scale(a[rr][j]);
                }
            }
        }
        let want = f.terms.get(comp).cloned().unwrap_or_default();
        if acc != want {
            return Err(Error::NonZeroResidual);
        }
    }
    Ok(out)
}

// ---------- shuffle-form brackets ----------

/// `(dinv, area)` generating function over the parking functions whose
/// reading word shuffles the k big labels ascending into the small labels
/// descending, with every big-labeled north step followed by an east step.
/// This is the pairing against `e_{n-k} h_k`.
pub fn bracket_e_h(n: u32, m: u32, k: u32) -> Result<QtPolynomial> {
    let mut out = QtPolynomial::zero();
    if m == 1 {
        for w in crate::pathcore::enumerate_paths(PathKind::Schroder { n, d: k, m: 1 })? {
            let pf = crate::parking::schroder_to_parking(&w)?;
            out.add_term(
                crate::parking::dinv(&pf).total as u32,
                pf.area() as u32,
                1,
            );
        }
        return Ok(out);
    }
    for pf in enumerate_parking(n, m)? {
        if is_shuffle_form(&pf, k) {
            out.add_term(
                crate::parking::dinv(&pf).total as u32,
                pf.area() as u32,
                1,
            );
        }
    }
    Ok(out)
}

fn is_shuffle_form(pf: &ParkingFunction, k: u32) -> bool {
    let n = pf.n();
    let big_min = n - k + 1;
    let rw = reading_word(pf);
    let bigs: Vec<u32> = rw.iter().copied().filter(|&x| x >= big_min).collect();
    let smalls: Vec<u32> = rw.iter().copied().filter(|&x| x < big_min).collect();
    if !bigs.windows(2).all(|w| w[0] < w[1]) || !smalls.windows(2).all(|w| w[0] > w[1]) {
        return false;
    }
    // big rows followed by an east step
    let mut row = 0usize;
    let letters = pf.path().letters();
    for (i, s) in letters.iter().enumerate() {
        if *s == Step::N {
            if pf.labels()[row] >= big_min
                && (i + 1 >= letters.len() || letters[i + 1] != Step::E) {
                    return false;
                }
            row += 1;
        }
    }
    true
}

/// The alternating hook bracket
/// `sum_{k=d+1}^{n} (-1)^{k-d-1} <nabla^m e_n, e_{n-k} h_k>`, which expands
/// the hook Schur pairing by inclusion-exclusion.
pub fn alternating_hook_bracket(n: u32, m: u32, d: u32) -> Result<QtPolynomial> {
    if d >= n {
        return Err(Error::OutOfRange(format!("d = {} must be < n = {}", d, n)));
    }
    let mut out = QtPolynomial::zero();
    for k in (d + 1)..=n {
        let sign = if (k - d - 1).is_multiple_of(2) { 1 } else { -1 };
        out = &out + &bracket_e_h(n, m, k)?.scale(sign);
    }
    Ok(out)
}

/// The Schroder wedge set under the calibrated reading: paths whose top row
/// step is a north step (word ends `N E^j`). At area 0 this coincides with
/// the literal NE suffix.
pub fn sch_generating_top_north(n: u32, d: u32) -> Result<QtPolynomial> {
    let mut p = QtPolynomial::zero();
    for w in crate::pathcore::enumerate_paths(PathKind::Schroder { n, d, m: 1 })? {
        let steps = w.row_steps();
        if steps.last() == Some(&Step::N) {
            p.add_term(
                crate::pathcore::bounce(&w)? as u32,
                crate::pathcore::area(&w) as u32,
                1,
            );
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(u32, u32, i64)]) -> QtPolynomial {
        let mut p = QtPolynomial::zero();
        for &(q, t, c) in terms {
            p.add_term(q, t, c);
        }
        p
    }

    #[test]
    fn poly_ops() {
        let p = poly(&[(2, 1, 1)]);
        assert_eq!(p.swap_qt(), poly(&[(1, 2, 1)]));
        let r = poly(&[(2, 0, 1), (1, 1, 1), (0, 2, 1)]);
        assert_eq!(r.eval_t0(), poly(&[(2, 0, 1)]));
        let a = poly(&[(0, 0, 1), (1, 0, 1)]);
        let b = poly(&[(0, 0, 1), (0, 1, 1)]);
        assert_eq!(
            &a * &b,
            poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
        );
    }

    #[test]
    fn display_is_stable() {
        let p = poly(&[(1, 0, 1), (0, 1, 1), (1, 1, 2)]);
        assert_eq!(p.to_string(), "q + t + 2 q t");
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(2, 1), poly(&[(0, 0, 1), (1, 0, 1)]));
        assert_eq!(
            gaussian_binomial(4, 2),
            poly(&[(0, 0, 1), (1, 0, 1), (2, 0, 2), (3, 0, 1), (4, 0, 1)])
        );
        assert_eq!(gaussian_binomial(5, 0), QtPolynomial::one());
    }

    #[test]
    fn gaussian_matches_rectangle_areas() {
        for n in 0..=10u32 {
            for k in 0..=n {
                let mut gen = QtPolynomial::zero();
                for w in crate::pathcore::enumerate_paths(PathKind::Rect { n, k }).unwrap() {
                    gen.add_term(crate::pathcore::area(&w) as u32, 0, 1);
                }
                assert_eq!(gen, gaussian_binomial(n, k), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn schur_qt_examples() {
        assert_eq!(schur_qt(1, 1).unwrap(), poly(&[(1, 1, 1)]));
        assert_eq!(
            schur_qt(2, 0).unwrap(),
            poly(&[(2, 0, 1), (1, 1, 1), (0, 2, 1)])
        );
        assert_eq!(schur_qt(2, 1).unwrap(), poly(&[(2, 1, 1), (1, 2, 1)]));
        assert!(schur_qt(1, 2).is_err());
    }

    #[test]
    fn schur_decompose_examples() {
        let e = schur_decompose(&poly(&[(1, 0, 1), (0, 1, 1)])).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([((1, 0), 1)]));
        // q^3 + q^2 t + q t^2 + t^3 + q t = s_3 + s_{1,1}
        let p = poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)]);
        let e = schur_decompose(&p).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([((3, 0), 1), ((1, 1), 1)]));
        let p = &schur_qt(2, 1).unwrap() + &schur_qt(2, 0).unwrap();
        let e = schur_decompose(&p).unwrap();
        assert_eq!(e.coeffs, BTreeMap::from([((2, 1), 1), ((2, 0), 1)]));
        assert!(schur_decompose(&poly(&[(1, 0, 1)])).is_err());
    }

    #[test]
    fn restrict_examples() {
        let e = SchurQtExpansion {
            coeffs: BTreeMap::from([((3, 0), 1), ((1, 1), 1)]),
        };
        assert_eq!(
            restrict(&e, Restriction::OnePart).coeffs,
            BTreeMap::from([((3, 0), 1)])
        );
        assert_eq!(
            restrict(&e, Restriction::PureHooks).coeffs,
            BTreeMap::from([((1, 1), 1)])
        );
        let e = SchurQtExpansion {
            coeffs: BTreeMap::from([((2, 1), 1), ((2, 0), 1), ((2, 2), 5)]),
        };
        assert_eq!(
            restrict(&e, Restriction::Hooks).coeffs,
            BTreeMap::from([((2, 1), 1), ((2, 0), 1)])
        );
    }

    #[test]
    fn sch_generating_examples() {
        assert_eq!(
            sch_generating(2, 1, false).unwrap(),
            poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            sch_generating(2, 0, false).unwrap(),
            poly(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            sch_generating(3, 1, true).unwrap(),
            poly(&[(1, 0, 1), (2, 0, 1), (1, 1, 1)])
        );
    }

    #[test]
    fn oracle_small_values() {
        let o2 = nabla_oracle(2, 1).unwrap();
        assert_eq!(
            o2.coeff(&Partition::new(vec![1, 1]).unwrap()),
            poly(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            o2.coeff(&Partition::new(vec![2]).unwrap()),
            QtPolynomial::one()
        );
        let o3 = nabla_oracle(3, 1).unwrap();
        assert_eq!(
            o3.coeff(&Partition::new(vec![1, 1, 1]).unwrap()),
            poly(&[(3, 0, 1), (2, 1, 1), (1, 2, 1), (0, 3, 1), (1, 1, 1)])
        );
        assert_eq!(
            o3.coeff(&Partition::new(vec![2, 1]).unwrap()),
            poly(&[(2, 0, 1), (1, 1, 1), (0, 2, 1), (1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            o3.coeff(&Partition::new(vec![3]).unwrap()),
            QtPolynomial::one()
        );
    }

    #[test]
    fn oracle_limit_respected() {
        assert!(matches!(
            nabla_oracle(12, 1),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn oracle_symmetric_and_positive() {
        for (n, m) in [(4, 1), (5, 1), (3, 2)] {
            let o = nabla_oracle(n, m).unwrap();
            for (shape, p) in &o.coeffs {
                assert!(p.is_symmetric(), "n={} m={} {:?}", n, m, shape);
                let e = schur_decompose(p).unwrap();
                assert!(e.is_nonnegative(), "n={} m={} {:?}", n, m, shape);
            }
        }
    }

    #[test]
    fn stanley_lusztig_at_q0() {
        for n in 2..=5u32 {
            let o = nabla_oracle(n, 1).unwrap();
            for shape in Partition::all(n) {
                let mut rhs = QtPolynomial::zero();
                for t in enumerate_syt(&shape) {
                    rhs.add_term(0, t.maj() as u32, 1);
                }
                assert_eq!(o.coeff(&shape).eval_q0(), rhs, "{:?}", shape);
            }
        }
    }

    #[test]
    fn q0_specialization_rescales_to_m1() {
        for (n, m) in [(2u32, 2u32), (3, 2), (4, 2), (2, 3), (3, 3)] {
            let om = nabla_oracle(n, m).unwrap();
            let o1 = nabla_oracle(n, 1).unwrap();
            let shift = (m - 1) * n * (n - 1) / 2;
            for shape in Partition::all(n) {
                let lhs = om.coeff(&shape).eval_q0();
                let rhs = o1.coeff(&shape).eval_q0().shift(0, shift);
                assert_eq!(lhs, rhs, "n={} m={} {:?}", n, m, shape);
            }
        }
    }

    #[test]
    fn oracle_counts_all_parking_functions_at_one_one() {
        for (n, m) in [(2u32, 2u32), (3, 1), (3, 2), (4, 1)] {
            let o = nabla_oracle(n, m).unwrap();
            let total: i64 = o
                .coeffs
                .iter()
                .map(|(shape, p)| p.eval_one_one() * shape.syt_count() as i64)
                .sum();
            assert_eq!(total, ((m * n + 1) as i64).pow(n - 1));
        }
    }

    #[test]
    fn alternating_bracket_examples() {
        assert_eq!(
            alternating_hook_bracket(2, 1, 0).unwrap(),
            poly(&[(1, 0, 1), (0, 1, 1)])
        );
        assert_eq!(
            alternating_hook_bracket(2, 1, 1).unwrap(),
            QtPolynomial::one()
        );
        assert_eq!(
            alternating_hook_bracket(3, 1, 1).unwrap(),
            poly(&[(2, 0, 1), (1, 1, 1), (0, 2, 1), (1, 0, 1), (0, 1, 1)])
        );
    }

    #[test]
    fn alternating_bracket_matches_oracle() {
        for (n, m) in [(2, 1), (3, 1), (4, 1), (2, 2), (3, 2)] {
            let o = nabla_oracle(n, m).unwrap();
            for d in 0..n {
                let hook = Partition::hook(n, d + 1).unwrap();
                assert_eq!(
                    alternating_hook_bracket(n, m, d).unwrap(),
                    o.coeff(&hook),
                    "n={} m={} d={}",
                    n,
                    m,
                    d
                );
            }
        }
    }

    proptest! {
        #[test]
        fn decompose_roundtrips(parts in proptest::collection::vec((0u32..8, 0u32..4, 1i64..5), 1..6)) {
            let mut p = QtPolynomial::zero();
            for (a, b, c) in parts {
                let (a, b) = if a >= b { (a, b) } else { (b, a) };
                p = &p + &schur_qt(a, b).unwrap().scale(c);
            }
            let e = schur_decompose(&p).unwrap();
            prop_assert_eq!(e.reconstruct(), p);
            prop_assert!(e.is_nonnegative());
        }

        #[test]
        fn swap_is_involutive(parts in proptest::collection::vec((0u32..9, 0u32..9, -4i64..5), 0..8)) {
            let mut p = QtPolynomial::zero();
            for (q, t, c) in parts {
                p.add_term(q, t, c);
            }
            prop_assert_eq!(p.swap_qt().swap_qt(), p);
        }
    }
}
