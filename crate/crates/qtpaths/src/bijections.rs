//! The constructive maps tying paths to tableaux: the east-sliding chain and
//! its statistic-swapping involution, the relabeling map onto rectangles,
//! the area-0 and area-1 tableau bijections, the cyclic defect-shifting map
//! and its orbit bijection, and the over/under splitting with its
//! degree-lowering bijection.

use crate::pathcore::{
    area, bounce, enumerate_paths, touch, PathKind, PathWord, Step,
};
use crate::qtsym::QtPolynomial;
use crate::tableaux::{hook_from_descents, Tableau};
use crate::{Error, Result};
use std::collections::BTreeSet;

fn word_kind(letters: &[Step], m: u32) -> PathKind {
    let n = letters.iter().filter(|s| !matches!(s, Step::E)).count() as u32;
    let d = letters.iter().filter(|s| matches!(s, Step::D)).count() as u32;
    PathKind::Schroder { n, d, m }
}

fn reword(letters: Vec<Step>) -> PathWord {
    let kind = word_kind(&letters, 1);
    PathWord::new(letters, kind).expect("rewritten word stays a valid path")
}

/// True when the word is a concatenation of NE and D factors (area 0).
pub fn is_ne_d_word(p: &PathWord) -> bool {
    let l = p.letters();
    let mut i = 0;
    while i < l.len() {
        match l[i] {
            Step::D => i += 1,
            Step::N if i + 1 < l.len() && l[i + 1] == Step::E => i += 2,
            _ => return false,
        }
    }
    true
}

/// The east-sliding chain of a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiChain {
    pub steps: Vec<PathWord>,
}

impl PhiChain {
    pub fn start(&self) -> &PathWord {
        &self.steps[0]
    }

    pub fn stats(&self) -> Vec<(u64, u64)> {
        self.steps
            .iter()
            .map(|w| (bounce(w).expect("chain words are square"), area(w)))
            .collect()
    }
}

fn movable_index(letters: &[Step]) -> Option<usize> {
    (0..letters.len().saturating_sub(1))
        .rev()
        .find(|&i| letters[i] == Step::E && letters[i + 1] != Step::E)
}

/// Slide the rightmost east step with a non-east successor one position to
/// the right, repeatedly, recording every word. On an area-0 word over
/// {NE, D} the chain has exactly bounce + 1 elements and trades bounce for
/// area one unit per step.
pub fn phi(g: &PathWord) -> Result<PhiChain> {
    match g.kind() {
        PathKind::Schroder { m: 1, .. } | PathKind::Dyck { m: 1, .. } => {}
        k => return Err(Error::NotSchroder(format!("{:?}", k))),
    }
    let mut steps = vec![g.clone()];
    let mut cur = g.letters().to_vec();
    while let Some(i) = movable_index(&cur) {
        cur.swap(i, i + 1);
        steps.push(reword(cur.clone()));
    }
    Ok(PhiChain { steps })
}

/// Second element of the chain.
pub fn phi_tilde(g: &PathWord) -> Result<PathWord> {
    let chain = phi(g)?;
    if chain.steps.len() < 2 {
        return Err(Error::EmptyChain);
    }
    Ok(chain.steps[1].clone())
}

/// Membership test for the image of `phi_tilde` on area-0 inputs: the unique
/// defect factor is a trailing NNEE, or an NDE followed by diagonal steps
/// and at most one final NE.
pub fn in_phi_tilde_image(w: &PathWord) -> bool {
    if area(w) != 1 {
        return false;
    }
    let Some((kind, _s, e)) = find_defect(w) else {
        return false;
    };
    let tail = &w.letters()[e..];
    match kind {
        Defect::Nnee => tail.is_empty(),
        Defect::Nde => {
            let t: Vec<Step> = tail
                .iter()
                .copied()
                .skip_while(|s| *s == Step::D)
                .collect();
            t.is_empty() || t == [Step::N, Step::E]
        }
    }
}

/// Area-0 chain start with the same relative N/D pattern.
fn chain_start(w: &PathWord) -> PathWord {
    let mut letters = Vec::new();
    for s in w.letters() {
        match s {
            Step::N => {
                letters.push(Step::N);
                letters.push(Step::E);
            }
            Step::D => letters.push(Step::D),
            Step::E => {}
        }
    }
    reword(letters)
}

/// The statistic-swapping involution on the union of the chains of all
/// {NE, D} words: locate the word inside its own chain at index i and
/// return the element at index bounce + area - i.
pub fn omega(g: &PathWord) -> Result<PathWord> {
    let start = chain_start(g);
    if !is_ne_d_word(&start) {
        return Err(Error::NotInImage);
    }
    let chain = phi(&start)?;
    let i = chain
        .steps
        .iter()
        .position(|w| w == g)
        .ok_or(Error::NotInImage)?;
    let b = bounce(g)? as usize;
    let a = area(g) as usize;
    Ok(chain.steps[b + a - i].clone())
}

/// Relabel NE as N and D as E; sends area-0 words with d diagonal steps to
/// rectangle words with `bounce = area + binom(n-d, 2)`.
pub fn theta(g: &PathWord) -> Result<PathWord> {
    if !is_ne_d_word(g) {
        return Err(Error::NotAreaZeroForm);
    }
    let mut letters = Vec::new();
    let l = g.letters();
    let mut i = 0;
    while i < l.len() {
        match l[i] {
            Step::D => {
                letters.push(Step::E);
                i += 1;
            }
            _ => {
                letters.push(Step::N);
                i += 2;
            }
        }
    }
    let n = letters.len() as u32;
    let k = letters.iter().filter(|s| **s == Step::E).count() as u32;
    PathWord::new(letters, PathKind::Rect { n, k })
}

// ---------- area-0 bijection with hook tableaux ----------

fn touch_factor_words(g: &PathWord) -> Result<Vec<Vec<Step>>> {
    Ok(touch(g)?.factors)
}

/// Hook tableau to area-0 word ending NE: descent i puts NE at factor n-i.
pub fn map_m(t: &Tableau) -> Result<PathWord> {
    if !t.shape.is_hook() {
        return Err(Error::BadShape(format!("{:?} is not a hook", t.shape)));
    }
    let n = t.size();
    let des = t.descents();
    let mut letters = Vec::new();
    for pos in 1..=n {
        let i = n - pos;
        if i == 0 || des.contains(&i) {
            letters.push(Step::N);
            letters.push(Step::E);
        } else {
            letters.push(Step::D);
        }
    }
    Ok(reword(letters))
}

/// Inverse of `map_m`: NE touch factors below the top give the descent set.
pub fn map_r(g: &PathWord) -> Result<Tableau> {
    if !is_ne_d_word(g) || g.letters().last() != Some(&Step::E) {
        return Err(Error::NotAreaZeroForm);
    }
    let facs = touch_factor_words(g)?;
    let n = facs.len() as u32;
    let des: BTreeSet<u32> = facs[..facs.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, f)| f.len() == 2)
        .map(|(i, _)| n - (i as u32 + 1))
        .collect();
    let d = n - des.len() as u32;
    hook_from_descents(n, d, &des)
}

// ---------- area-1 bijections ----------

/// Hook tableau (with n - d >= 1) to its area-1 orbit representative.
pub fn map_s(t: &Tableau) -> Result<PathWord> {
    if !t.shape.is_hook() {
        return Err(Error::BadShape(format!("{:?} is not a hook", t.shape)));
    }
    let n = t.size();
    let des = t.descents();
    let Some(&mx) = des.iter().max() else {
        return Err(Error::BadShape("shape (n) has no descents".into()));
    };
    let mut letters = Vec::new();
    for pos in 1..n {
        let i = n - pos;
        if i == mx {
            if des.contains(&1) {
                letters.extend([Step::N, Step::N, Step::E, Step::E]);
            } else {
                letters.extend([Step::N, Step::D, Step::E]);
            }
        } else if i == 1 || des.contains(&i) {
            letters.extend([Step::N, Step::E]);
        } else {
            letters.push(Step::D);
        }
    }
    Ok(reword(letters))
}

/// Inverse of `map_s` on the D^jNNEE / D^jNDE family.
pub fn map_t(g: &PathWord) -> Result<Tableau> {
    let stripped: Vec<Step> = g
        .letters()
        .iter()
        .copied()
        .skip_while(|s| *s == Step::D)
        .collect();
    let starts_nnee = stripped.starts_with(&[Step::N, Step::N, Step::E, Step::E]);
    let starts_nde = stripped.starts_with(&[Step::N, Step::D, Step::E]);
    if !starts_nnee && !starts_nde {
        return Err(Error::NotInV);
    }
    if area(g) != 1 {
        return Err(Error::NotAreaOne);
    }
    let facs = touch_factor_words(g)?;
    let n = facs.len() as u32 + 1;
    let mut des: BTreeSet<u32> = facs
        .iter()
        .enumerate()
        .filter(|(_, f)| f.first() == Some(&Step::N))
        .map(|(i, _)| n - (i as u32 + 1))
        .collect();
    if starts_nde {
        des.remove(&1);
    }
    let d = n - des.len() as u32;
    hook_from_descents(n, d, &des)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Defect {
    Nnee,
    Nde,
}

/// The unique NNEE or NDE touch factor of an area-1 word, with its letter
/// span.
fn find_defect(w: &PathWord) -> Option<(Defect, usize, usize)> {
    let facs = touch(w).ok()?.factors;
    let mut pos = 0;
    for f in &facs {
        if f == &[Step::N, Step::N, Step::E, Step::E] {
            return Some((Defect::Nnee, pos, pos + 4));
        }
        if f == &[Step::N, Step::D, Step::E] {
            return Some((Defect::Nde, pos, pos + 3));
        }
        pos += f.len();
    }
    None
}

/// The area-1 words with d diagonal steps ending in NE or NNEE; the set the
/// orbit machinery acts on.
pub fn area_one_family(n: u32, d: u32) -> Result<Vec<PathWord>> {
    Ok(enumerate_paths(PathKind::Schroder { n, d, m: 1 })?
        .into_iter()
        .filter(|w| {
            area(w) == 1 && {
                let l = w.letters();
                let ne = l.len() >= 2 && l[l.len() - 2..] == [Step::N, Step::E];
                let nnee = l.len() >= 4
                    && l[l.len() - 4..] == [Step::N, Step::N, Step::E, Step::E];
                ne || nnee
            }
        })
        .collect())
}

/// Shift the area-1 defect one touch factor upward, cyclically. Identity
/// when the word has n - 2 diagonal steps.
pub fn map_pi(w: &PathWord) -> Result<PathWord> {
    if area(w) != 1 {
        return Err(Error::NotAreaOne);
    }
    let n = w.rows() as u32;
    let d = match w.kind() {
        PathKind::Schroder { d, .. } => d,
        PathKind::Dyck { .. } => 0,
        _ => return Err(Error::NotAreaOne),
    };
    if d == n - 2 {
        return Ok(w.clone());
    }
    let (kind, s, e) = find_defect(w).ok_or(Error::NotAreaOne)?;
    let pre = &w.letters()[..s];
    let rest = &w.letters()[e..];
    let mut out: Vec<Step> = Vec::with_capacity(w.letters().len());
    match kind {
        Defect::Nnee => {
            if !rest.is_empty() {
                // swap NNEE with the next NE past any diagonal steps
                let j = rest.iter().take_while(|s| **s == Step::D).count();
                debug_assert_eq!(&rest[j..j + 2], &[Step::N, Step::E]);
                out.extend_from_slice(pre);
                out.extend([Step::N, Step::E]);
                out.extend(std::iter::repeat_n(Step::D, j));
                out.extend([Step::N, Step::N, Step::E, Step::E]);
                out.extend_from_slice(&rest[j + 2..]);
            } else {
                // defect at the very end wraps to the front NE
                let i = pre.iter().take_while(|s| **s == Step::D).count();
                debug_assert_eq!(&pre[i..i + 2], &[Step::N, Step::E]);
                let u = &pre[i + 2..];
                let j = u.iter().rev().take_while(|s| **s == Step::D).count();
                out.extend(std::iter::repeat_n(Step::D, i));
                out.extend([Step::N, Step::N, Step::E, Step::E]);
                out.extend_from_slice(&u[..u.len() - j]);
                out.extend(std::iter::repeat_n(Step::D, j));
                out.extend([Step::N, Step::E]);
            }
        }
        Defect::Nde => {
            let j = rest.iter().take_while(|s| **s == Step::D).count();
            debug_assert_eq!(&rest[j..j + 2], &[Step::N, Step::E]);
            let after = &rest[j + 2..];
            if !after.is_empty() {
                // plain upward swap
                out.extend_from_slice(pre);
                out.extend([Step::N, Step::E]);
                out.extend(std::iter::repeat_n(Step::D, j));
                out.extend([Step::N, Step::D, Step::E]);
                out.extend_from_slice(after);
            } else {
                // defect just below the top wraps to the front NE
                let i = pre.iter().take_while(|s| **s == Step::D).count();
                debug_assert_eq!(&pre[i..i + 2], &[Step::N, Step::E]);
                let u = &pre[i + 2..];
                out.extend(std::iter::repeat_n(Step::D, i));
                out.extend([Step::N, Step::D, Step::E]);
                out.extend_from_slice(u);
                out.extend([Step::N, Step::E]);
                out.extend(std::iter::repeat_n(Step::D, j));
                out.extend([Step::N, Step::E]);
            }
        }
    }
    Ok(reword(out))
}

/// `Q(tau, i) = Pi^i(S(tau))` for `0 <= i <= n - d - 1`.
pub fn map_q(t: &Tableau, i: u32) -> Result<PathWord> {
    let n = t.size();
    let d = t.shape.parts()[0];
    if n == d {
        return Err(Error::BadShape("shape (n) is out of range".into()));
    }
    if i > n - d - 1 {
        return Err(Error::IndexOutOfOrbit {
            index: i,
            order: n - d,
        });
    }
    let mut w = map_s(t)?;
    for _ in 0..i {
        w = map_pi(&w)?;
    }
    Ok(w)
}

/// Inverse of `map_q`: the orbit position is the number of NE touch factors
/// below the defect.
pub fn map_q_inverse(w: &PathWord) -> Result<(Tableau, u32)> {
    if area(w) != 1 {
        return Err(Error::NotAreaOne);
    }
    let facs = touch_factor_words(w)?;
    let mut i = 0u32;
    for f in &facs {
        if f.len() >= 3 && f.first() == Some(&Step::N) {
            break;
        }
        if f.len() == 2 {
            i += 1;
        }
    }
    let n = w.rows() as u32;
    let c = w
        .letters()
        .iter()
        .filter(|s| matches!(s, Step::D))
        .count() as u32;
    let order = n - (c + 1);
    let mut back = w.clone();
    if order > 0 {
        for _ in 0..(order - i % order) % order {
            back = map_pi(&back)?;
        }
    }
    let tab = map_t(&back)?;
    Ok((tab, i))
}

// ---------- over / under splitting ----------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverUnder {
    Over,
    Under,
    Exceptional,
}

/// Template classification of the area-1 family.
pub fn over_under_classify(w: &PathWord) -> Result<OverUnder> {
    if area(w) != 1 {
        return Err(Error::NotAreaOne);
    }
    let (kind, s, e) = find_defect(w).ok_or(Error::NotAreaOne)?;
    let pre = &w.letters()[..s];
    let rest = &w.letters()[e..];
    match kind {
        Defect::Nde => Ok(OverUnder::Under),
        Defect::Nnee => {
            if pre.contains(&Step::N) {
                return Ok(OverUnder::Over);
            }
            // prefix is all diagonal steps
            if rest.is_empty() || rest == [Step::N, Step::E] {
                return Ok(OverUnder::Exceptional);
            }
            let tail4 = &rest[rest.len().saturating_sub(4)..];
            if tail4 == [Step::N, Step::E, Step::N, Step::E] {
                Ok(OverUnder::Over)
            } else {
                debug_assert_eq!(
                    &rest[rest.len() - 3..],
                    &[Step::D, Step::N, Step::E]
                );
                Ok(OverUnder::Under)
            }
        }
    }
}

/// Bijection from the over family with d diagonal steps onto the under
/// family with d + 1, lowering bounce by exactly one.
pub fn map_rho(w: &PathWord) -> Result<PathWord> {
    if over_under_classify(w)? != OverUnder::Over {
        return Err(Error::NotOver);
    }
    let (_, s, e) = find_defect(w).ok_or(Error::NotAreaOne)?;
    let pre = &w.letters()[..s];
    let rest = &w.letters()[e..];
    let mut out = Vec::with_capacity(w.letters().len() - 1);
    if pre.contains(&Step::N) {
        // gamma' NE D^j NNEE gamma'' -> gamma' NDE D^j NE gamma''
        let j = pre.iter().rev().take_while(|st| **st == Step::D).count();
        let base = &pre[..pre.len() - j];
        debug_assert_eq!(&base[base.len() - 2..], &[Step::N, Step::E]);
        out.extend_from_slice(&base[..base.len() - 2]);
        out.extend([Step::N, Step::D, Step::E]);
        out.extend(std::iter::repeat_n(Step::D, j));
        out.extend([Step::N, Step::E]);
        out.extend_from_slice(rest);
    } else {
        // D^j NNEE gamma' NENE -> D^j NNEE gamma' DNE
        debug_assert_eq!(
            &rest[rest.len() - 4..],
            &[Step::N, Step::E, Step::N, Step::E]
        );
        out.extend_from_slice(pre);
        out.extend([Step::N, Step::N, Step::E, Step::E]);
        out.extend_from_slice(&rest[..rest.len() - 4]);
        out.extend([Step::D, Step::N, Step::E]);
    }
    Ok(reword(out))
}

/// Inverse of `map_rho`.
pub fn map_rho_inverse(w: &PathWord) -> Result<PathWord> {
    if area(w) != 1 {
        return Err(Error::NotAreaOne);
    }
    let (kind, s, e) = find_defect(w).ok_or(Error::NotAreaOne)?;
    let pre = &w.letters()[..s];
    let rest = &w.letters()[e..];
    let mut out = Vec::with_capacity(w.letters().len() + 1);
    match kind {
        Defect::Nde => {
            // gamma' NDE D^j NE gamma'' -> gamma' NE D^j NNEE gamma''
            let j = rest.iter().take_while(|st| **st == Step::D).count();
            debug_assert_eq!(&rest[j..j + 2], &[Step::N, Step::E]);
            out.extend_from_slice(pre);
            out.extend([Step::N, Step::E]);
            out.extend(std::iter::repeat_n(Step::D, j));
            out.extend([Step::N, Step::N, Step::E, Step::E]);
            out.extend_from_slice(&rest[j + 2..]);
        }
        Defect::Nnee => {
            // D^j NNEE gamma' DNE -> D^j NNEE gamma' NENE
            if rest.len() < 3 || rest[rest.len() - 3..] != [Step::D, Step::N, Step::E] {
                return Err(Error::NotOver);
            }
            out.extend_from_slice(pre);
            out.extend([Step::N, Step::N, Step::E, Step::E]);
            out.extend_from_slice(&rest[..rest.len() - 3]);
            out.extend([Step::N, Step::E, Step::N, Step::E]);
        }
    }
    Ok(reword(out))
}

// ---------- the alternating pure-hook sums ----------

fn subsets_of_size(universe: std::ops::RangeInclusive<u32>, k: usize) -> Vec<BTreeSet<u32>> {
    let items: Vec<u32> = universe.collect();
    let mut out = Vec::new();
    let mut cur = BTreeSet::new();
    fn rec(
        items: &[u32],
        start: usize,
        k: usize,
        cur: &mut BTreeSet<u32>,
        out: &mut Vec<BTreeSet<u32>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.insert(items[i]);
            rec(items, i + 1, k, cur, out);
            cur.remove(&items[i]);
        }
    }
    rec(&items, 0, k, &mut cur, &mut out);
    out
}

/// The three faces of the alternating pure-hook sum for 0 <= k <= n - 3:
/// the bounce generating function over the over family, and two tableau
/// sums that are equal to each other (the second carries the one-unit
/// statistic shift of the degree-lowering bijection).
pub fn h_k(n: u32, k: u32) -> Result<(QtPolynomial, QtPolynomial, QtPolynomial)> {
    if n < 3 || k > n - 3 {
        return Err(Error::OutOfRange(format!("k = {} must satisfy 0 <= k <= n - 3", k)));
    }
    let mut path_form = QtPolynomial::zero();
    for w in area_one_family(n, k)? {
        if over_under_classify(&w)? == OverUnder::Over {
            path_form.add_term(bounce(&w)? as u32, 0, 1);
        }
    }
    // form A over SYT(k+1, 1^{n-k-1})
    let mut tab_a = QtPolynomial::zero();
    for des in subsets_of_size(1..=(n - 1), (n - k - 1) as usize) {
        let mj: u32 = des.iter().sum();
        let ds = des.len() as u32;
        if des.contains(&1) && des.contains(&2) {
            tab_a.add_term(mj - ds, 0, 1);
        }
        if des.contains(&1) {
            for i in 2..=(n - k - 2) {
                tab_a.add_term(mj - i, 0, 1);
            }
        }
    }
    // form B over SYT(k+2, 1^{n-k-2}), with the shift of the lowering map
    let mut tab_b = QtPolynomial::zero();
    for des in subsets_of_size(1..=(n - 1), (n - k - 2) as usize) {
        let mj: u32 = des.iter().sum();
        let ds = des.len() as u32;
        if des.contains(&1) && !des.contains(&2) {
            tab_b.add_term(mj - ds + 1, 0, 1);
        }
        if !des.contains(&1) {
            for i in 1..=n.saturating_sub(k + 3) {
                tab_b.add_term(mj - i, 0, 1);
            }
        }
    }
    Ok((path_form, tab_a, tab_b))
}
