//! Identity suites pitting the closed formulas against the brute-force
//! oracle and against each other. Each suite returns a self-contained
//! report; Fail marks a broken invariant, Discrepancy marks a documented
//! boundary where a printed identity departs from the calibrated statistics.

use crate::bijections::{
    area_one_family, h_k, map_rho, over_under_classify, OverUnder,
};
use crate::parking::{
    dinv, dinv_one_criterion, dinv_zero_criterion, enumerate_parking, schroder_to_parking,
    ParkingFunction,
};
use crate::pathcore::{area, bounce, enumerate_paths, PathKind, PathWord};
use crate::qtsym::{
    alternating_hook_bracket, gaussian_binomial, nabla_oracle_with_limit, restrict, sch_generating,
    sch_generating_top_north, schur_decompose, schur_qt, QtPolynomial, Restriction,
    SchurQtExpansion,
};
use crate::tableaux::{enumerate_syt, Partition};
use crate::Result;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Pass,
    Fail,
    Discrepancy,
}

/// Outcome of one identity check at one parameter point.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub parameters: String,
    pub status: Status,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
    /// First counterexample or exact difference when the sides differ.
    pub witness: Option<String>,
}

impl VerificationReport {
    fn pass(identity: &str, parameters: String) -> Self {
        VerificationReport {
            identity: identity.into(),
            parameters,
            status: Status::Pass,
            lhs: serde_json::Value::Null,
            rhs: serde_json::Value::Null,
            witness: None,
        }
    }

    fn from_polys(
        identity: &str,
        parameters: String,
        lhs: &QtPolynomial,
        rhs: &QtPolynomial,
        fail_status: Status,
    ) -> Self {
        if lhs == rhs {
            return VerificationReport {
                identity: identity.into(),
                parameters,
                status: Status::Pass,
                lhs: lhs.to_json(),
                rhs: rhs.to_json(),
                witness: None,
            };
        }
        let diff = &lhs.clone() + &rhs.scale(-1);
        VerificationReport {
            identity: identity.into(),
            parameters,
            status: fail_status,
            lhs: lhs.to_json(),
            rhs: rhs.to_json(),
            witness: Some(format!("difference = {}", diff)),
        }
    }

    fn from_expansions(
        identity: &str,
        parameters: String,
        lhs: &SchurQtExpansion,
        rhs: &SchurQtExpansion,
        fail_status: Status,
    ) -> Self {
        if lhs == rhs {
            return VerificationReport {
                identity: identity.into(),
                parameters,
                status: Status::Pass,
                lhs: lhs.to_json(),
                rhs: rhs.to_json(),
                witness: None,
            };
        }
        VerificationReport {
            identity: identity.into(),
            parameters,
            status: fail_status,
            lhs: lhs.to_json(),
            rhs: rhs.to_json(),
            witness: Some(format!("lhs = {} vs rhs = {}", lhs, rhs)),
        }
    }
}

/// A batch of reports with an overall exit status.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ReportBundle {
    pub reports: Vec<VerificationReport>,
}

impl ReportBundle {
    pub fn push(&mut self, r: VerificationReport) {
        self.reports.push(r);
    }

    pub fn extend(&mut self, rs: Vec<VerificationReport>) {
        self.reports.extend(rs);
    }

    pub fn has_fail(&self) -> bool {
        self.reports.iter().any(|r| r.status == Status::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut disc = 0;
        for r in &self.reports {
            match r.status {
                Status::Pass => pass += 1,
                Status::Fail => fail += 1,
                Status::Discrepancy => disc += 1,
            }
        }
        (pass, fail, disc)
    }
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn hook_sum_for_tableaux(shape: &Partition) -> SchurQtExpansion {
    // sum over SYT: s_maj + sum_{i=2}^{des} s_{maj-i,1}
    let mut coeffs = std::collections::BTreeMap::new();
    for t in enumerate_syt(shape) {
        let maj = t.maj() as u32;
        let des = t.des();
        *coeffs.entry((maj, 0)).or_insert(0) += 1;
        for i in 2..=des {
            *coeffs.entry((maj - i, 1)).or_insert(0) += 1;
        }
    }
    coeffs.retain(|_, v| *v != 0);
    SchurQtExpansion { coeffs }
}

/// For every hook shape, the hook part of the oracle
/// pairing equals the tableau sum.
pub fn verify_hook_pairing_formula(n: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, 1, n)?;
    let mut out = Vec::new();
    for d in 1..=n {
        let mu = Partition::hook(n, d)?;
        let lhs = restrict(&schur_decompose(&oracle.coeff(&mu))?, Restriction::Hooks);
        let rhs = hook_sum_for_tableaux(&mu);
        out.push(VerificationReport::from_expansions(
            "hook-pairing-tableau-sum",
            format!("n={} mu=({},1^{})", n, d, n - d),
            &lhs,
            &rhs,
            Status::Fail,
        ));
    }
    Ok(out)
}

/// One-part restrictions are counted by the major index,
/// shifted by (m-1) * binom(n,2).
pub fn verify_one_part_formula(n: u32, m: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, m, n)?;
    let shift = ((m as u64 - 1) * binom2(n as u64)) as u32;
    let mut out = Vec::new();
    for nu in Partition::all(n) {
        let lhs = restrict(&schur_decompose(&oracle.coeff(&nu))?, Restriction::OnePart);
        let mut coeffs = std::collections::BTreeMap::new();
        for t in enumerate_syt(&nu) {
            *coeffs.entry((t.maj() as u32 + shift, 0)).or_insert(0i64) += 1;
        }
        let rhs = SchurQtExpansion { coeffs };
        out.push(VerificationReport::from_expansions(
            "one-part-major-index",
            format!("n={} m={} nu={:?}", n, m, nu.parts()),
            &lhs,
            &rhs,
            Status::Fail,
        ));
    }
    Ok(out)
}

/// The hook part of the elementary pairing in closed form.
pub fn verify_elementary_hook_formula(n: u32, m: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, m, n)?;
    let e_n = Partition::new(vec![1; n as usize])?;
    let lhs = restrict(&schur_decompose(&oracle.coeff(&e_n))?, Restriction::Hooks);
    let top = (m as u64 * binom2(n as u64)) as u32;
    let mut coeffs = std::collections::BTreeMap::from([((top, 0), 1i64)]);
    for i in 2..n {
        *coeffs.entry((top - i, 1)).or_insert(0) += 1;
    }
    let rhs = SchurQtExpansion { coeffs };
    Ok(vec![VerificationReport::from_expansions(
        "elementary-pairing-hooks",
        format!("n={} m={}", n, m),
        &lhs,
        &rhs,
        Status::Fail,
    )])
}

/// The two one-part displays: chain sums against rectangle areas against the
/// oracle's one-part restriction.
pub fn verify_one_part_displays(n: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, 1, n)?;
    let mut out = Vec::new();
    for d in 0..=n {
        // sum over {NE,D}^n with d D's of s_bounce = sum over rect C^n_d of
        // s_{area + binom(n-d,2)}
        let mut lhs_coeffs = std::collections::BTreeMap::new();
        for w in enumerate_paths(PathKind::Schroder { n, d, m: 1 })? {
            if crate::bijections::is_ne_d_word(&w) {
                *lhs_coeffs
                    .entry((bounce(&w)? as u32, 0u32))
                    .or_insert(0i64) += 1;
            }
        }
        let mut rhs_coeffs = std::collections::BTreeMap::new();
        let off = binom2((n - d) as u64) as u32;
        for w in enumerate_paths(PathKind::Rect { n, k: d })? {
            *rhs_coeffs.entry((area(&w) as u32 + off, 0u32)).or_insert(0i64) += 1;
        }
        out.push(VerificationReport::from_expansions(
            "one-part-chain-heads-vs-rectangles",
            format!("n={} d={}", n, d),
            &SchurQtExpansion { coeffs: lhs_coeffs.clone() },
            &SchurQtExpansion { coeffs: rhs_coeffs },
            Status::Fail,
        ));
        // against the oracle: <nabla e_n, e_{n-d} h_d>|1part
        if d <= n {
            let mut bracket = QtPolynomial::zero();
            for w in enumerate_paths(PathKind::Schroder { n, d, m: 1 })? {
                bracket.add_term(bounce(&w)? as u32, area(&w) as u32, 1);
            }
            let one_part = restrict(&schur_decompose(&bracket)?, Restriction::OnePart);
            let lhs_exp = SchurQtExpansion { coeffs: lhs_coeffs };
            out.push(VerificationReport::from_expansions(
                "one-part-of-elementary-homogeneous-bracket",
                format!("n={} d={}", n, d),
                &one_part,
                &lhs_exp,
                Status::Fail,
            ));
        }
        // NE-suffix variant against the oracle hook coefficient's one part
        if d < n {
            let mut lhs2 = std::collections::BTreeMap::new();
            for w in enumerate_paths(PathKind::Schroder { n, d, m: 1 })? {
                if crate::bijections::is_ne_d_word(&w)
                    && w.letters().last() == Some(&crate::pathcore::Step::E)
                {
                    *lhs2.entry((bounce(&w)? as u32, 0u32)).or_insert(0i64) += 1;
                }
            }
            let mu = Partition::hook(n, d + 1)?;
            let rhs2 = restrict(
                &schur_decompose(&oracle.coeff(&mu))?,
                Restriction::OnePart,
            );
            out.push(VerificationReport::from_expansions(
                "one-part-of-hook-pairing-vs-ne-suffix-heads",
                format!("n={} d={}", n, d),
                &SchurQtExpansion { coeffs: lhs2 },
                &rhs2,
                Status::Fail,
            ));
        }
    }
    Ok(out)
}

fn criterion_report(
    identity: &str,
    params: String,
    total: usize,
    mismatches: Vec<String>,
) -> VerificationReport {
    if mismatches.is_empty() {
        let mut r = VerificationReport::pass(identity, params);
        r.lhs = serde_json::json!({ "checked": total });
        r
    } else {
        VerificationReport {
            identity: identity.into(),
            parameters: params,
            status: Status::Fail,
            lhs: serde_json::json!({ "checked": total }),
            rhs: serde_json::json!({ "mismatches": mismatches.len() }),
            witness: Some(mismatches[0].clone()),
        }
    }
}

/// Exhaustive agreement of the structural dinv criteria with the statistic.
pub fn verify_dinv_criteria(n: u32, m: u32) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    // dinv = 0 criterion over all parking functions
    let mut mism = Vec::new();
    let mut total = 0;
    for pf in enumerate_parking(n, m)? {
        total += 1;
        if dinv_zero_criterion(&pf) != (dinv(&pf).total == 0) {
            mism.push(format!("{} {:?}", pf.path(), pf.labels()));
        }
    }
    out.push(criterion_report(
        "dinv-zero-criterion",
        format!("n={} m={}", n, m),
        total,
        mism,
    ));
    // dinv = 1 criterion on its domains
    let mut mism = Vec::new();
    let mut total = 0;
    if m >= 2 {
        for pf in enumerate_parking(n, m)? {
            total += 1;
            if dinv_one_criterion(&pf)? != (dinv(&pf).total == 1) {
                mism.push(format!("{} {:?}", pf.path(), pf.labels()));
            }
        }
        out.push(criterion_report(
            "dinv-one-criterion-labeled",
            format!("n={} m={}", n, m),
            total,
            mism,
        ));
    } else {
        for d in 0..=n {
            for w in enumerate_paths(PathKind::Schroder { n, d, m: 1 })? {
                total += 1;
                let pf = schroder_to_parking(&w)?;
                if dinv_one_criterion(&pf)? != (dinv(&pf).total == 1) {
                    mism.push(w.to_string());
                }
            }
        }
        out.push(criterion_report(
            "dinv-one-criterion-schroder-form",
            format!("n={}", n),
            total,
            mism,
        ));
    }
    // the decreasing-reading-word domain
    let mut mism = Vec::new();
    let mut total = 0;
    for w in enumerate_paths(PathKind::Dyck { n, m })? {
        let pf = canonical_unlabeled(&w)?;
        total += 1;
        if dinv_one_criterion(&pf)? != (dinv(&pf).total == 1) {
            mism.push(w.to_string());
        }
    }
    out.push(criterion_report(
        "dinv-one-criterion-unlabeled",
        format!("n={} m={}", n, m),
        total,
        mism,
    ));
    if m == 1 && n >= 4 {
        out.extend(counterexample_reports()?);
    }
    Ok(out)
}

fn canonical_unlabeled(w: &PathWord) -> Result<ParkingFunction> {
    let n = w.rows() as u32;
    let order = crate::parking::reading_row_order(w);
    let mut labels = vec![0u32; n as usize];
    let mut next = n;
    for r in order {
        labels[r] = next;
        next -= 1;
    }
    ParkingFunction::new(w.clone(), labels)
}

/// The three documented square-grid counterexamples: the big-gap top case
/// that still has dinv 1, and the two shapes meeting the two-bullet test
/// with dinv above 1.
fn counterexample_reports() -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    // dinv 1 with a gap of three at the top
    let pf17 = ParkingFunction::new(
        PathWord::parse("NNNEEENE", PathKind::Dyck { n: 4, m: 1 })?,
        vec![1, 2, 3, 4],
    )?;
    let ok17 = dinv(&pf17).total == 1 && dinv_one_criterion(&pf17)? ;
    out.push(if ok17 {
        VerificationReport::pass(
            "counterexample-big-top-gap-dinv-one",
            "n=4 path=NNNEEENE labels=1234".into(),
        )
    } else {
        VerificationReport {
            identity: "counterexample-big-top-gap-dinv-one".into(),
            parameters: "n=4 path=NNNEEENE labels=1234".into(),
            status: Status::Fail,
            lhs: serde_json::json!(dinv(&pf17).total),
            rhs: serde_json::json!(1),
            witness: Some("expected dinv 1 and a passing criterion".into()),
        }
    });
    // bullet-one shape with dinv 2
    let pf18 = ParkingFunction::new(
        PathWord::parse("NNENENEE", PathKind::Dyck { n: 4, m: 1 })?,
        vec![1, 2, 4, 3],
    )?;
    let gaps18 = pf18.path().row_gaps();
    let shape18 = gaps18.iter().all(|&g| g <= 1)
        && crate::pathcore::column_count(pf18.path()) == 3;
    let ok18 = shape18 && dinv(&pf18).total == 2 && !dinv_one_criterion(&pf18)?;
    out.push(report_bool(
        "counterexample-two-bullet-shape-dinv-two",
        "n=4 path=NNENENEE labels=1243",
        ok18,
    ));
    // single-gap-of-two shape with dinv above 1
    let pf19 = ParkingFunction::new(
        PathWord::parse("NNEENENE", PathKind::Dyck { n: 4, m: 1 })?,
        vec![1, 4, 3, 2],
    )?;
    let gaps19 = pf19.path().row_gaps();
    let shape19 = gaps19.iter().filter(|&&g| g == 2).count() == 1
        && gaps19.iter().all(|&g| g <= 2);
    let ok19 = shape19 && dinv(&pf19).total != 1;
    out.push(report_bool(
        "counterexample-single-double-gap-dinv-above-one",
        "n=4 path=NNEENENE labels=1432",
        ok19,
    ));
    Ok(out)
}

fn report_bool(identity: &str, params: &str, ok: bool) -> VerificationReport {
    if ok {
        VerificationReport::pass(identity, params.into())
    } else {
        VerificationReport {
            identity: identity.into(),
            parameters: params.into(),
            status: Status::Fail,
            lhs: serde_json::Value::Null,
            rhs: serde_json::Value::Null,
            witness: Some("documented counterexample did not reproduce".into()),
        }
    }
}

/// The (dinv, area) multiset over canonical labelings equals the
/// (bounce, area) multiset over the same Schroder words.
pub fn verify_equidistribution(n: u32, d: u32) -> Result<Vec<VerificationReport>> {
    let mut lhs = QtPolynomial::zero();
    let mut rhs = QtPolynomial::zero();
    for w in enumerate_paths(PathKind::Schroder { n, d, m: 1 })? {
        let pf = schroder_to_parking(&w)?;
        lhs.add_term(dinv(&pf).total as u32, pf.area() as u32, 1);
        rhs.add_term(bounce(&w)? as u32, area(&w) as u32, 1);
    }
    Ok(vec![VerificationReport::from_polys(
        "dinv-area-vs-bounce-area-equidistribution",
        format!("n={} d={}", n, d),
        &lhs,
        &rhs,
        Status::Fail,
    )])
}

/// Scan the hook-sum formula over every shape; hooks must pass, non-hooks
/// are reported but never asserted.
pub fn verify_hook_formula_scan(n: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, 1, n)?;
    let mut out = Vec::new();
    for mu in Partition::all(n) {
        let lhs = restrict(&schur_decompose(&oracle.coeff(&mu))?, Restriction::Hooks);
        let rhs = hook_sum_for_tableaux(&mu);
        let fail_status = if mu.is_hook() {
            Status::Fail
        } else {
            Status::Discrepancy
        };
        out.push(VerificationReport::from_expansions(
            "hook-sum-formula-scan",
            format!("n={} mu={:?}{}", n, mu.parts(), if mu.is_hook() { "" } else { " (conjectural)" }),
            &lhs,
            &rhs,
            fail_status,
        ));
    }
    Ok(out)
}

/// Raw wedge-set identity per (n, d) under the literal NE-suffix reading
/// (reported, not asserted) and under the top-north calibration (asserted).
pub fn verify_nabla_schur_raw(n: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, 1, n)?;
    let mut out = Vec::new();
    for d in 0..n {
        let mu = Partition::hook(n, d + 1)?;
        let target = oracle.coeff(&mu);
        let literal = sch_generating(n, d, true)?;
        out.push(VerificationReport::from_polys(
            "hook-pairing-vs-ne-suffix-generating-function",
            format!("n={} d={}", n, d),
            &literal,
            &target,
            Status::Discrepancy,
        ));
        let top_north = sch_generating_top_north(n, d)?;
        out.push(VerificationReport::from_polys(
            "hook-pairing-vs-top-north-generating-function",
            format!("n={} d={}", n, d),
            &top_north,
            &target,
            Status::Fail,
        ));
    }
    Ok(out)
}

/// Alternating bracket, area formula and the t = 0 q-analogue against the
/// oracle.
pub fn verify_alternating_and_q_analogue(n: u32, m: u32) -> Result<Vec<VerificationReport>> {
    let oracle = nabla_oracle_with_limit(n, m, n)?;
    let mut out = Vec::new();
    for d in 0..n {
        let mu = Partition::hook(n, d + 1)?;
        let lhs = alternating_hook_bracket(n, m, d)?;
        let target = oracle.coeff(&mu);
        out.push(VerificationReport::from_polys(
            "alternating-elementary-homogeneous-bracket",
            format!("n={} m={} d={}", n, m, d),
            &lhs,
            &target,
            Status::Fail,
        ));
        // t = 0 slice is a shifted Gaussian binomial
        let shift = ((m as u64 - 1) * binom2(n as u64) + binom2((n - d) as u64)) as u32;
        let rhs = gaussian_binomial(n - 1, d).shift(shift, 0);
        out.push(VerificationReport::from_polys(
            "hook-pairing-t0-gaussian",
            format!("n={} m={} d={}", n, m, d),
            &target.eval_t0(),
            &rhs,
            Status::Fail,
        ));
    }
    // area formula on dinv-zero parking functions
    let mut mism = Vec::new();
    let mut total = 0;
    for pf in enumerate_parking(n, m)? {
        if dinv(&pf).total == 0 {
            total += 1;
            if crate::parking::area_from_maj(&pf)? != pf.area() {
                mism.push(format!("{} {:?}", pf.path(), pf.labels()));
            }
        }
    }
    out.push(criterion_report(
        "area-from-major-index",
        format!("n={} m={}", n, m),
        total,
        mism,
    ));
    Ok(out)
}

/// Over/under partition, the degree-lowering bijection, and the three faces
/// of the alternating pure-hook sum.
pub fn verify_over_under(n: u32) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for d in 0..n.saturating_sub(1) {
        let family = area_one_family(n, d)?;
        let mut over = 0usize;
        let mut under = 0usize;
        let mut exc = Vec::new();
        for w in &family {
            match over_under_classify(w)? {
                OverUnder::Over => over += 1,
                OverUnder::Under => under += 1,
                OverUnder::Exceptional => exc.push(w.to_string()),
            }
        }
        let mut expected = Vec::new();
        if d == n - 2 {
            expected.push(format!("{}NNEE", "D".repeat(d as usize)));
        }
        if d + 3 == n {
            expected.push(format!("{}NNEENE", "D".repeat(d as usize)));
        }
        exc.sort();
        expected.sort();
        out.push(report_bool(
            "area-one-family-splits-into-over-under",
            &format!("n={} d={} over={} under={} exceptional={:?}", n, d, over, under, exc),
            exc == expected,
        ));
        // rho: bijection with bounce - 1
        let overs: Vec<&PathWord> = family
            .iter()
            .filter(|w| over_under_classify(w).unwrap() == OverUnder::Over)
            .collect();
        let mut images = std::collections::BTreeSet::new();
        let mut ok = true;
        for w in &overs {
            let r = map_rho(w)?;
            ok &= bounce(&r)? + 1 == bounce(w)?;
            ok &= over_under_classify(&r)? == OverUnder::Under;
            ok &= crate::bijections::map_rho_inverse(&r)? == **w;
            images.insert(r.to_string());
        }
        if d + 1 < n {
            let unders: std::collections::BTreeSet<String> = area_one_family(n, d + 1)?
                .into_iter()
                .filter(|w| over_under_classify(w).unwrap() == OverUnder::Under)
                .map(|w| w.to_string())
                .collect();
            ok &= images == unders;
        }
        out.push(report_bool(
            "lowering-map-is-a-bounce-decrementing-bijection",
            &format!("n={} d={}", n, d),
            ok,
        ));
    }
    // h_k faces
    if n >= 3 {
        for k in 0..=(n - 3) {
            let (path_form, tab_a, tab_b) = h_k(n, k)?;
            out.push(VerificationReport::from_polys(
                "pure-hook-alternating-sum-tableau-forms",
                format!("n={} k={}", n, k),
                &tab_a,
                &tab_b,
                Status::Fail,
            ));
            out.push(VerificationReport::from_polys(
                "pure-hook-alternating-sum-path-form",
                format!("n={} k={} (path form carries the one-part overlay)", n, k),
                &path_form,
                &tab_a,
                Status::Discrepancy,
            ));
            // definitional check against the oracle when affordable
            if n <= crate::qtsym::oracle_limit(1) {
                let oracle = nabla_oracle_with_limit(n, 1, n)?;
                let mut defn = QtPolynomial::zero();
                for d in 0..=k {
                    let mu = Partition::hook(n, d + 1)?;
                    let pure =
                        restrict(&schur_decompose(&oracle.coeff(&mu))?, Restriction::PureHooks);
                    let sign = if (k - d) % 2 == 0 { 1 } else { -1 };
                    for (&(a, _b), &c) in &pure.coeffs {
                        // psi sends the pure hook to q^{a+1}; the alternating
                        // weight contributes q^{d-k}
                        defn.add_term(a + 1 + d - k, 0, c * sign);
                    }
                }
                out.push(VerificationReport::from_polys(
                    "pure-hook-alternating-sum-oracle",
                    format!("n={} k={}", n, k),
                    &defn,
                    &tab_a.shift(1, 0),
                    Status::Fail,
                ));
            }
        }
    }
    Ok(out)
}

/// The commuting square: lowering the chain's second element once and
/// reading the tableau recovers the area-0 tableau.
pub fn verify_commuting_diagram(n: u32) -> Result<Vec<VerificationReport>> {
    let mut checked = 0;
    let mut mism = Vec::new();
    for mask in 0u64..(1 << (n - 1)) {
        let mut text = String::new();
        for i in 0..(n - 1) {
            if mask >> i & 1 == 1 {
                text.push('D');
            } else {
                text.push_str("NE");
            }
        }
        text.push_str("NE");
        let d = text.chars().filter(|c| *c == 'D').count() as u32;
        let g = PathWord::parse(&text, PathKind::Schroder { n, d, m: 1 })?;
        let Ok(g1) = crate::bijections::phi_tilde(&g) else {
            continue;
        };
        checked += 1;
        let lhs = crate::bijections::map_t(&crate::bijections::map_pi(&g1)?)?;
        let rhs = crate::bijections::map_r(&g)?;
        if lhs != rhs {
            mism.push(g.to_string());
        }
    }
    Ok(vec![criterion_report(
        "chain-then-shift-matches-direct-tableau",
        format!("n={}", n),
        checked,
        mism,
    )])
}

/// Chain sums realize one-part Schur polynomials.
pub fn verify_chain_sums(n: u32) -> Result<Vec<VerificationReport>> {
    let mut mism = Vec::new();
    let mut checked = 0;
    for mask in 0u64..(1 << n) {
        let mut text = String::new();
        for i in 0..n {
            if mask >> i & 1 == 1 {
                text.push('D');
            } else {
                text.push_str("NE");
            }
        }
        let d = text.chars().filter(|c| *c == 'D').count() as u32;
        let g = PathWord::parse(&text, PathKind::Schroder { n, d, m: 1 })?;
        let chain = crate::bijections::phi(&g)?;
        let b = bounce(&g)?;
        let mut sum = QtPolynomial::zero();
        for w in &chain.steps {
            sum.add_term(bounce(w)? as u32, area(w) as u32, 1);
        }
        checked += 1;
        if sum != schur_qt(b as u32, 0)? || chain.steps.len() as u64 != b + 1 {
            mism.push(g.to_string());
        }
    }
    Ok(vec![criterion_report(
        "chain-sums-are-one-part-schur",
        format!("n={}", n),
        checked,
        mism,
    )])
}

/// Which suites to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    MainFormulas,
    OnePart,
    Dinv,
    Equidistribution,
    Conjecture,
    OverUnder,
    Diagram,
    NablaSchur,
    Brackets,
    All,
}

/// Run a suite at size n (and m where meaningful), collecting reports.
pub fn run_suite(suite: Suite, n: u32, m: u32) -> Result<ReportBundle> {
    let mut bundle = ReportBundle::default();
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::MainFormulas) {
        bundle.extend(verify_hook_pairing_formula(n)?);
        bundle.extend(verify_one_part_formula(n, m)?);
        bundle.extend(verify_elementary_hook_formula(n, m)?);
    }
    if want(Suite::OnePart) {
        bundle.extend(verify_one_part_displays(n)?);
        bundle.extend(verify_chain_sums(n)?);
    }
    if want(Suite::Dinv) {
        bundle.extend(verify_dinv_criteria(n, m)?);
    }
    if want(Suite::Equidistribution) {
        for d in 0..=n {
            bundle.extend(verify_equidistribution(n, d)?);
        }
    }
    if want(Suite::Conjecture) {
        bundle.extend(verify_hook_formula_scan(n)?);
    }
    if want(Suite::OverUnder) {
        bundle.extend(verify_over_under(n)?);
    }
    if want(Suite::Diagram) {
        bundle.extend(verify_commuting_diagram(n)?);
    }
    if want(Suite::NablaSchur) {
        bundle.extend(verify_nabla_schur_raw(n)?);
    }
    if want(Suite::Brackets) {
        bundle.extend(verify_alternating_and_q_analogue(n, m)?);
    }
    Ok(bundle)
}
