//! The claim-verification runner: recomputes every in-scope dimension
//! and classification claim and reports PASS / FAIL /
//! DISCREPANCY_DOCUMENTED per claim. Deterministic: sampling uses a
//! fixed-seed ChaCha stream, so two runs produce identical reports.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{unit, Algebra};
use crate::catalog::{build, FamilySpec};
use crate::cohomology::{
    bl2, bl2_labels_f1, bl2_labels_f2, coboundary, derivation_space, hl2_dim,
    hl2_representatives_f1, hl2_representatives_f2, named_cochain, skew_cocycles2,
    zl2, zl2_labels_f1, zl2_labels_f2, Cochain, CochainLabel, LabeledFamily,
};
use crate::deformation::{integrable_linear, verify_constraint_system, Integrability};
use crate::degeneration::{degenerates_via, diagonal_powers};
use crate::field::{qi, Q};
use crate::linalg::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "DISCREPANCY_DOCUMENTED")]
    DiscrepancyDocumented,
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub claim_id: String,
    pub expected: String,
    pub source: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n_lo: usize,
    pub n_hi: usize,
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let id_w = self
            .claims
            .iter()
            .map(|c| c.claim_id.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let exp_w = self
            .claims
            .iter()
            .map(|c| c.expected.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let cmp_w = self
            .claims
            .iter()
            .map(|c| c.computed.len())
            .max()
            .unwrap_or(8)
            .max(8);
        let mut out = String::new();
        out.push_str(&format!(
            "{:id_w$}  {:exp_w$}  {:cmp_w$}  STATUS\n",
            "CLAIM", "EXPECTED", "COMPUTED"
        ));
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::DiscrepancyDocumented => "DISCREPANCY_DOCUMENTED",
            };
            out.push_str(&format!(
                "{:id_w$}  {:exp_w$}  {:cmp_w$}  {status}\n",
                c.claim_id, c.expected, c.computed
            ));
        }
        let fails = self.claims.iter().filter(|c| c.status == Status::Fail).count();
        let disc = self
            .claims
            .iter()
            .filter(|c| c.status == Status::DiscrepancyDocumented)
            .count();
        out.push_str(&format!(
            "{} claims: {} pass, {} fail, {} documented discrepancies\n",
            self.claims.len(),
            self.claims.len() - fails - disc,
            fails,
            disc
        ));
        out
    }
}

struct Runner {
    rng: ChaCha8Rng,
    claims: Vec<Claim>,
}

impl Runner {
    fn push(&mut self, claim_id: &str, source: &str, expected: String, computed: String) {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        self.claims.push(Claim {
            claim_id: claim_id.to_string(),
            expected,
            source: source.to_string(),
            computed,
            status,
        });
    }

    fn push_status(
        &mut self,
        claim_id: &str,
        source: &str,
        expected: String,
        computed: String,
        status: Status,
    ) {
        self.claims.push(Claim {
            claim_id: claim_id.to_string(),
            expected,
            source: source.to_string(),
            computed,
            status,
        });
    }

    fn rand_q(&mut self) -> Q {
        let num: i64 = self.rng.gen_range(-3..=3);
        let den: i64 = self.rng.gen_range(1..=2);
        Q::new(num.into(), den.into())
    }

    fn rand_q_nonzero(&mut self) -> Q {
        loop {
            let q = self.rand_q();
            if !q.is_zero() {
                return q;
            }
        }
    }
}

/// Run the full claim suite for dimensions n_lo..=n_hi (3 <= n_lo <=
/// n_hi <= 12; the default range is 3..=8).
pub fn run_verification(n_lo: usize, n_hi: usize) -> Result<VerificationReport, String> {
    if !(3..=12).contains(&n_lo) || !(3..=12).contains(&n_hi) || n_lo > n_hi {
        return Err(format!("n range {n_lo}..{n_hi} must lie within 3..12"));
    }
    let mut r = Runner {
        rng: ChaCha8Rng::seed_from_u64(20260824),
        claims: Vec::new(),
    };
    for n in n_lo..=n_hi {
        leibniz_suite(&mut r, n);
    }
    for n in n_lo..=n_hi {
        dimension_suite_f1(&mut r, n);
        dimension_suite_f2(&mut r, n);
        if n >= 4 {
            rigidity_suite_r(&mut r, n);
        }
        dimension_suite_f3(&mut r, n);
    }
    for n in n_lo..=n_hi.min(6) {
        if n >= 3 {
            basis_suite(&mut r, n);
        }
        if n >= 4 {
            integrability_suite(&mut r, n);
            constraint_suite(&mut r, n);
            degeneration_suite(&mut r, n);
        }
    }
    property_suite(&mut r, n_lo, n_hi);
    Ok(VerificationReport {
        n_lo,
        n_hi,
        claims: r.claims,
    })
}

fn defect_count(a: &Algebra) -> usize {
    a.leibniz_defect().len()
}

/// Criterion 1: every catalog Leibniz family member has an empty defect.
fn leibniz_suite(r: &mut Runner, n: usize) {
    let check = |r: &mut Runner, fam: &str, specs: Vec<FamilySpec>| {
        let mut total = 0usize;
        let mut failed = String::new();
        for s in &specs {
            match build(s) {
                Ok(a) => {
                    let d = defect_count(&a);
                    total += d;
                    if d > 0 && failed.is_empty() {
                        failed = format!(" (first at params {:?})", s.params);
                    }
                }
                Err(e) => {
                    total += 1;
                    failed = format!(" (build error: {e})");
                }
            }
        }
        r.push(
            &format!("Leibniz/{fam}/n={n}"),
            "Thm2.6+Thm2.7+Prop3.6+Prop3.17 tables",
            "0 defects".into(),
            format!("{total} defects{failed}"),
        );
    };
    for fam in ["NF", "F1graded", "F2graded", "R", "nu2", "nu4"] {
        check(r, fam, vec![FamilySpec::plain(fam, n)]);
    }
    {
        let mut specs = vec![FamilySpec::plain("F3graded", n)];
        if n.is_multiple_of(2) {
            specs.push(FamilySpec::with_params("F3graded", n, &[("alpha", qi(1))]));
        }
        check(r, "F3graded", specs);
    }
    // F1, F2, F3 at 5 sampled parameter vectors each
    let mut f1_specs = Vec::new();
    for _ in 0..5 {
        let mut params = vec![("theta".to_string(), r.rand_q())];
        for m in 4..=n {
            params.push((format!("alpha{m}"), r.rand_q()));
        }
        f1_specs.push(spec_of("F1", n, params));
    }
    check(r, "F1", f1_specs);
    let mut f2_specs = Vec::new();
    for _ in 0..5 {
        let mut params = vec![("gamma".to_string(), r.rand_q())];
        for m in 3..=n - 1 {
            params.push((format!("beta{m}"), r.rand_q()));
        }
        f2_specs.push(spec_of("F2", n, params));
    }
    check(r, "F2", f2_specs);
    // F3 samples: random theta's over the alpha = 0 backbone (cocycle
    // directions psi_1..psi_3, always integrable)
    let mut f3_specs = Vec::new();
    for _ in 0..5 {
        let params = vec![
            ("theta1".to_string(), r.rand_q()),
            ("theta2".to_string(), r.rand_q()),
            ("theta3".to_string(), r.rand_q()),
        ];
        f3_specs.push(spec_of("F3", n, params));
    }
    check(r, "F3", f3_specs);
    // mu_tilde, lambda: 3 samples each
    for fam in ["mu_tilde", "lambda"] {
        let pre = if fam == "mu_tilde" { "alpha" } else { "a" };
        let lo = if fam == "mu_tilde" { 2 } else { 1 };
        let mut specs = Vec::new();
        for _ in 0..3 {
            let params = (lo..=n)
                .map(|k| (format!("{pre}{k}"), r.rand_q()))
                .collect();
            specs.push(spec_of(fam, n, params));
        }
        check(r, fam, specs);
    }
    // nu1: random a's with the sum normalized to 1
    let mut nu1_specs = Vec::new();
    for _ in 0..3 {
        let mut params: Vec<(String, Q)> = (2..=n - 2)
            .map(|k| (format!("a{k}"), r.rand_q()))
            .collect();
        let sum: Q = params.iter().fold(Q::zero(), |acc, (_, v)| acc + v.clone());
        params.push((format!("a{}", n - 1), Q::one() - sum));
        nu1_specs.push(spec_of("nu1", n, params));
    }
    check(r, "nu1", nu1_specs);
    // nu3: only b_{n-1} varies (the Leibniz slice of the family; see the
    // constraint system: b_n * b_k = 0 forces b_2..b_{n-2} to vanish)
    let mut nu3_specs = Vec::new();
    for _ in 0..3 {
        let params = vec![(format!("b{}", n - 1), r.rand_q())];
        nu3_specs.push(spec_of("nu3", n, params));
    }
    check(r, "nu3", nu3_specs);
    // nu5: a_2..a_{n-1} free
    let mut nu5_specs = Vec::new();
    for _ in 0..3 {
        let params = (2..=n - 1)
            .map(|k| (format!("a{k}"), r.rand_q()))
            .collect();
        nu5_specs.push(spec_of("nu5", n, params));
    }
    check(r, "nu5", nu5_specs);
}

fn spec_of(fam: &str, n: usize, params: Vec<(String, Q)>) -> FamilySpec {
    FamilySpec {
        family_id: fam.to_string(),
        n,
        params,
    }
}

/// Criterion 2.
fn dimension_suite_f1(r: &mut Runner, n: usize) {
    let a = build(&FamilySpec::plain("F1graded", n)).unwrap();
    let z = zl2(&a).unwrap().dim();
    let b = bl2(&a).unwrap().dim();
    let h = hl2_dim(&a).unwrap();
    r.push(
        &format!("Cor3.3/n={n}"),
        "Cor3.3",
        format!("dim ZL2 = {}", n * n + n - 1),
        format!("dim ZL2 = {z}"),
    );
    r.push(
        &format!("BL2(F1)/n={n}"),
        "Prop3.4 basis count",
        format!("dim BL2 = {}", n * n - n - 1),
        format!("dim BL2 = {b}"),
    );
    r.push(
        &format!("Cor3.5/n={n}"),
        "Cor3.5",
        format!("dim HL2 = {}", 2 * n),
        format!("dim HL2 = {h}"),
    );
}

/// Criterion 3.
fn dimension_suite_f2(r: &mut Runner, n: usize) {
    let a = build(&FamilySpec::plain("F2graded", n)).unwrap();
    let d = derivation_space(&a).dim();
    let z = zl2(&a).unwrap().dim();
    let b = bl2(&a).unwrap().dim();
    let h = hl2_dim(&a).unwrap();
    r.push(
        &format!("Der(F2)/n={n}"),
        "display (3.6)",
        format!("dim Der = {}", n + 2),
        format!("dim Der = {d}"),
    );
    r.push(
        &format!("Cor3.13/n={n}"),
        "Cor3.13",
        format!("dim ZL2 = {}", n * n + n),
        format!("dim ZL2 = {z}"),
    );
    r.push(
        &format!("BL2(F2)/n={n}"),
        "display (3.6) consequence",
        format!("dim BL2 = {}", n * n - n - 2),
        format!("dim BL2 = {b}"),
    );
    r.push(
        &format!("Cor3.15/n={n}"),
        "Cor3.15",
        format!("dim HL2 = {}", 2 * n + 2),
        format!("dim HL2 = {h}"),
    );
}

/// Criterion 4.
fn rigidity_suite_r(r: &mut Runner, n: usize) {
    let a = build(&FamilySpec::plain("R", n)).unwrap();
    let d = derivation_space(&a).dim();
    let h = hl2_dim(&a).unwrap();
    r.push(
        &format!("Prop3.8/n={n}"),
        "Prop3.8",
        "dim Der = 2".into(),
        format!("dim Der = {d}"),
    );
    r.push(
        &format!("Cor3.10/n={n}"),
        "Cor3.10 (rigidity: HL2 = 0)",
        "dim HL2 = 0".into(),
        format!("dim HL2 = {h}"),
    );
}

/// The displayed ZL2 dimension of the third graded family at alpha = 0.
fn zl2_f3_expected(n: usize) -> usize {
    match n {
        3 => 11,
        4 => 18,
        _ if n % 2 == 1 => (n - 1) * (3 * n - 5) / 8 + n * n - n + 2,
        _ => n * (3 * n - 10) / 8 + n * n - n + 3 + n / 4,
    }
}

/// The displayed skew-cocycle dimension of the third graded family.
fn z2_f3_expected(n: usize) -> usize {
    match n {
        3 => 8,
        4 => 15,
        _ if n % 2 == 1 => (n - 1) * (3 * n - 5) / 8 + n * n - n - 1,
        _ => n * (3 * n - 10) / 8 + n * n - n + n / 4,
    }
}

/// The displayed (inconsistent) HL2 value of the third graded family.
fn hl2_f3_displayed(n: usize) -> usize {
    match n {
        3 => 9,
        4 => 10,
        _ if n % 2 == 1 => (n - 1) * (3 * n - 5) / 8 + n + 2,
        _ => n * (3 * n - 10) / 8 + n + 3 + n / 4,
    }
}

/// Criteria 5, 6, 7.
fn dimension_suite_f3(r: &mut Runner, n: usize) {
    let a = build(&FamilySpec::plain("F3graded", n)).unwrap();
    let der = derivation_space(&a).dim();
    let z = zl2(&a).unwrap();
    let b = bl2(&a).unwrap();
    let der_exp = if n == 3 { 6 } else { 2 * n - 1 };
    let b_exp = if n == 3 { 3 } else { (n - 1) * (n - 1) };
    r.push(
        &format!("Cor3.22/n={n}"),
        "Cor3.22",
        format!("dim ZL2 = {}", zl2_f3_expected(n)),
        format!("dim ZL2 = {}", z.dim()),
    );
    r.push(
        &format!("Der(F3)/n={n}"),
        "derivation matrix display after Cor3.22",
        format!("dim Der = {der_exp}"),
        format!("dim Der = {der}"),
    );
    r.push(
        &format!("BL2(F3)/n={n}"),
        "display after Cor3.22",
        format!("dim BL2 = {b_exp}"),
        format!("dim BL2 = {}", b.dim()),
    );
    // criterion 6: skew cocycles and the three complementing cochains
    let skew = skew_cocycles2(&a).unwrap();
    r.push(
        &format!("Thm3.19/n={n}"),
        "Thm3.19",
        format!("dim Z2 = {}", z2_f3_expected(n)),
        format!("dim Z2 = {}", skew.dim()),
    );
    let mut complement_ok = true;
    for j in 1..=3 {
        let psi = named_cochain(LabeledFamily::F3Zero, n, &CochainLabel::Psi(j)).unwrap();
        let v = psi.flatten();
        let in_z = z.contains(&v).unwrap();
        let in_skew = skew.contains(&v).unwrap();
        if !in_z || in_skew {
            complement_ok = false;
        }
    }
    r.push(
        &format!("Thm3.21/n={n}"),
        "Thm3.21",
        "ZL2 - Z2 = 3; psi check ok".into(),
        format!(
            "ZL2 - Z2 = {}; psi check {}",
            z.dim() - skew.dim(),
            if complement_ok { "ok" } else { "failed" }
        ),
    );
    // criterion 7: the displayed HL2 vs the computed quotient
    let computed = hl2_dim(&a).unwrap();
    let displayed = hl2_f3_displayed(n);
    let cross = z.dim() - b.dim();
    let status = if computed != cross {
        Status::Fail
    } else if computed == displayed {
        Status::Pass
    } else {
        Status::DiscrepancyDocumented
    };
    r.push_status(
        &format!("Cor3.23/n={n}"),
        "Cor3.23 (display); computed value is authoritative",
        format!("dim HL2 = {displayed} (displayed)"),
        format!("dim HL2 = {computed} = ZL2 - BL2"),
        status,
    );
}

/// Criterion 8: explicit bases and representatives.
fn basis_suite(r: &mut Runner, n: usize) {
    let a1 = build(&FamilySpec::plain("F1graded", n)).unwrap();
    let a2 = build(&FamilySpec::plain("F2graded", n)).unwrap();
    let cases: [(&str, &str, &Algebra, LabeledFamily, Vec<CochainLabel>, bool, usize); 4] = [
        (
            "Thm3.2",
            "ZL2 basis",
            &a1,
            LabeledFamily::F1,
            zl2_labels_f1(n),
            false,
            n * n + n - 1,
        ),
        (
            "Prop3.4",
            "BL2 basis",
            &a1,
            LabeledFamily::F1,
            bl2_labels_f1(n),
            true,
            n * n - n - 1,
        ),
        (
            "Thm3.12",
            "ZL2 basis",
            &a2,
            LabeledFamily::F2,
            zl2_labels_f2(n),
            false,
            n * n + n,
        ),
        (
            "Prop3.14",
            "BL2 basis",
            &a2,
            LabeledFamily::F2,
            bl2_labels_f2(n),
            true,
            n * n - n - 2,
        ),
    ];
    for (id, what, alg, fam, labels, in_bl2, expected) in cases {
        let space = if in_bl2 {
            bl2(alg).unwrap()
        } else {
            zl2(alg).unwrap()
        };
        let mut member_fail = 0usize;
        let rows: Vec<Vec<Q>> = labels
            .iter()
            .map(|l| {
                let c = named_cochain(fam, n, l).unwrap().flatten();
                if !space.contains(&c).unwrap() {
                    member_fail += 1;
                }
                c
            })
            .collect();
        let span = Subspace::from_spanning_rows(rows, n * n * n).dim();
        r.push(
            &format!("{id}/n={n}"),
            &format!("{id} ({what})"),
            format!("{expected} members, span {expected}"),
            format!(
                "{} members, span {span}",
                labels.len() - member_fail
            ),
        );
    }
    // representatives independent modulo BL2
    for (id, alg, fam, reps) in [
        (
            "Cor3.5reps",
            &a1,
            LabeledFamily::F1,
            hl2_representatives_f1(n),
        ),
        (
            "Cor3.15reps",
            &a2,
            LabeledFamily::F2,
            hl2_representatives_f2(n),
        ),
    ] {
        let b = bl2(alg).unwrap();
        let mut joint = b.clone();
        for l in &reps {
            let c = named_cochain(fam, n, l).unwrap().flatten();
            joint = joint.sum(&Subspace::from_spanning_rows(vec![c], n * n * n));
        }
        r.push(
            &format!("{id}/n={n}"),
            id,
            format!("dim(BL2 + reps) = dim BL2 + {}", reps.len()),
            format!(
                "dim(BL2 + reps) = dim BL2 + {}",
                joint.dim() - b.dim()
            ),
        );
    }
}

/// Criterion 9.
fn integrability_suite(r: &mut Runner, n: usize) {
    let a = build(&FamilySpec::plain("F2graded", n)).unwrap();
    let mut wrong = Vec::new();
    let check = |label: CochainLabel, expect: bool, wrong: &mut Vec<String>| {
        let phi = named_cochain(LabeledFamily::F2, n, &label).unwrap();
        let got = integrable_linear(&a, &phi).unwrap();
        if got.is_integrable() != expect {
            wrong.push(label.to_string());
        }
        if expect && !matches!(got, Integrability::Integrable) {
            wrong.push(format!("{label} ({got:?})"));
        }
    };
    for j in 1..=n {
        for k in 2..=n {
            check(CochainLabel::Phi(j, k), true, &mut wrong);
        }
    }
    for j in 1..=n - 1 {
        check(CochainLabel::Psi(j), true, &mut wrong);
    }
    check(CochainLabel::Psi(n + 1), true, &mut wrong);
    check(CochainLabel::Psi(n), false, &mut wrong);
    check(CochainLabel::Psi(n + 2), false, &mut wrong);
    for j in 1..=n - 2 {
        check(CochainLabel::Phi(j, 1), false, &mut wrong);
    }
    r.push(
        &format!("Prop3.16/n={n}"),
        "Prop3.16",
        "all memberships as listed".into(),
        if wrong.is_empty() {
            "all memberships as listed".into()
        } else {
            format!("mismatches: {wrong:?}")
        },
    );
}

/// Criterion 10: 200 parameter vectors per family, half satisfying and
/// half violating the displayed system; constraints hold iff the defect
/// is empty.
fn constraint_suite(r: &mut Runner, n: usize) {
    // mu35 sampling
    let mut agree = 0usize;
    let mut sat = 0usize;
    for i in 0..200 {
        let mut params: Vec<(String, Q)> = Vec::new();
        if i % 2 == 0 {
            // satisfying: either the lambda branch (free a, rest zero) or
            // the a = 0 branch (free c and b, b2 = 0)
            if i % 4 == 0 {
                for k in 1..=n {
                    params.push((format!("a{k}"), r.rand_q()));
                }
            } else {
                params.push(("c1".into(), r.rand_q()));
                params.push(("cn".into(), r.rand_q()));
                for k in 4..=n {
                    params.push((format!("b{k}"), r.rand_q()));
                }
            }
        } else {
            // violating: b2 != 0, or a nonzero product
            if i % 4 == 1 {
                params.push(("b2".into(), r.rand_q_nonzero()));
            } else {
                params.push(("a2".into(), r.rand_q_nonzero()));
                params.push(("c1".into(), r.rand_q_nonzero()));
            }
            for k in 4..=n {
                params.push((format!("b{k}"), r.rand_q()));
            }
        }
        let rep = verify_constraint_system(&spec_of("mu35", n, params)).unwrap();
        if rep.agree {
            agree += 1;
        }
        if rep.all_hold {
            sat += 1;
        }
    }
    r.push(
        &format!("Prop3.6sys/n={n}"),
        "Prop3.6 proof system",
        "200/200 agree (100 satisfying)".into(),
        format!("{agree}/200 agree ({sat} satisfying)"),
    );
    // nu sampling, inside the reduction regime b1 = 0, a_n = 0, c1 = -b_n
    let mut agree = 0usize;
    let mut sat = 0usize;
    let mut regime = 0usize;
    for i in 0..200 {
        let mut params: Vec<(String, Q)> = Vec::new();
        let mut bn = Q::zero();
        if i % 2 == 0 {
            match i % 8 {
                0 => {
                    // F1/F2-type: a = 0, b_n = 0, free b_2..b_{n-1}, b_{n+1}
                    for k in 2..=n - 1 {
                        params.push((format!("b{k}"), r.rand_q()));
                    }
                    params.push((format!("b{}", n + 1), r.rand_q()));
                }
                2 => {
                    // nu3-type: b_n != 0, b_{n-1} free, a_{n-1} = -b_n
                    bn = r.rand_q_nonzero();
                    params.push((format!("b{n}"), bn.clone()));
                    params.push((format!("b{}", n - 1), r.rand_q()));
                    params.push((format!("a{}", n - 1), -bn.clone()));
                }
                4 => {
                    // nu5-type: b = 0 except b_n, free a
                    bn = r.rand_q_nonzero();
                    params.push((format!("b{n}"), bn.clone()));
                    for k in 2..=n - 1 {
                        params.push((format!("a{k}"), r.rand_q()));
                    }
                }
                _ => {
                    // nu4-type: b_{n+1} != 0, a_{n-1} = -2 b_n
                    bn = r.rand_q();
                    params.push((format!("b{n}"), bn.clone()));
                    params.push((format!("b{}", n + 1), r.rand_q_nonzero()));
                    params.push((format!("a{}", n - 1), -(bn.clone() + bn.clone())));
                }
            }
        } else {
            // violating: force a nonzero product in the first clause or
            // a stray b_{n+2}
            if i % 4 == 1 {
                bn = r.rand_q_nonzero();
                params.push((format!("b{n}"), bn.clone()));
                params.push(("b2".into(), r.rand_q_nonzero()));
            } else {
                params.push((format!("b{}", n + 2), r.rand_q_nonzero()));
            }
        }
        params.push(("c1".into(), -bn));
        let rep = verify_constraint_system(&spec_of("nu", n, params)).unwrap();
        if rep.agree {
            agree += 1;
        }
        if rep.all_hold {
            sat += 1;
        }
        if rep.regime_holds == Some(true) {
            regime += 1;
        }
    }
    r.push(
        &format!("Sys3.7/n={n}"),
        "display (3.7) + b_{n+2} = 0",
        "200/200 agree, 200 in regime (100 satisfying)".into(),
        format!("{agree}/200 agree, {regime} in regime ({sat} satisfying)"),
    );
}

/// The single-generated source algebra that degenerates onto nu1.
fn single_generated_source(n: usize, aks: &[(usize, Q)]) -> Algebra {
    let mut table: Vec<((usize, usize, usize), Q)> =
        (1..=n - 2).map(|i| ((i, 1, i + 1), Q::one())).collect();
    table.push(((n - 1, 1, n), Q::one()));
    for (k, v) in aks {
        table.push(((n - 1, 1, *k), v.clone()));
    }
    table.push(((n, 1, n), Q::one()));
    Algebra::from_table(n, &table)
}

/// Criterion 11: witnessed degenerations.
fn degeneration_suite(r: &mut Runner, n: usize) {
    // mu_tilde(0, a3, ..) --diag(1,t,..,t)--> lambda(0, 0, a3, ..)
    let mut ok = 0usize;
    for _ in 0..3 {
        let alphas: Vec<(usize, Q)> = (3..=n).map(|k| (k, r.rand_q())).collect();
        let src_params: Vec<(String, Q)> = alphas
            .iter()
            .map(|(k, v)| (format!("alpha{k}"), v.clone()))
            .collect();
        let tgt_params: Vec<(String, Q)> = alphas
            .iter()
            .map(|(k, v)| (format!("a{k}"), v.clone()))
            .collect();
        let src = build(&spec_of("mu_tilde", n, src_params)).unwrap();
        let tgt = build(&spec_of("lambda", n, tgt_params)).unwrap();
        let mut exps = vec![1i64; n];
        exps[0] = 0;
        if degenerates_via(&src, &diagonal_powers(&exps), &tgt).unwrap() {
            ok += 1;
        }
    }
    r.push(
        &format!("Prop3.7/n={n}"),
        "Prop3.7 proof witness",
        "3/3 degenerate".into(),
        format!("{ok}/3 degenerate"),
    );
    // Remark 3.18(1): single-generated source -> nu1, g_t scales x_n only
    let mut ok = 0usize;
    for _ in 0..3 {
        let mut aks: Vec<(usize, Q)> = (2..=n - 2).map(|k| (k, r.rand_q())).collect();
        let sum: Q = aks.iter().fold(Q::zero(), |acc, (_, v)| acc + v.clone());
        aks.push((n - 1, Q::one() - sum));
        let src = single_generated_source(n, &aks);
        let tgt_params: Vec<(String, Q)> = aks
            .iter()
            .map(|(k, v)| (format!("a{k}"), v.clone()))
            .collect();
        let tgt = build(&spec_of("nu1", n, tgt_params)).unwrap();
        let mut exps = vec![0i64; n];
        exps[n - 1] = 1;
        if degenerates_via(&src, &diagonal_powers(&exps), &tgt).unwrap() {
            ok += 1;
        }
    }
    r.push(
        &format!("Rem3.18/n={n}"),
        "Rem3.18(1) witness",
        "3/3 degenerate".into(),
        format!("{ok}/3 degenerate"),
    );
    if n == 4 {
        let nf4 = build(&FamilySpec::plain("NF", 4)).unwrap();
        let abelian: Algebra = Algebra::zero(4);
        let ok = degenerates_via(&nf4, &diagonal_powers(&[0, 1, 2, 3]), &abelian).unwrap();
        r.push(
            "NF4abelian",
            "diagonal scaling witness",
            "degenerates".into(),
            if ok { "degenerates" } else { "does not" }.to_string(),
        );
    }
}

/// Criterion 12: complex property suites.
fn property_suite(r: &mut Runner, n_lo: usize, n_hi: usize) {
    let cap = n_hi.min(6);
    let pool: Vec<Algebra> = {
        let mut v = Vec::new();
        for n in n_lo..=cap {
            for fam in ["NF", "F1graded", "F2graded", "F3graded", "R", "nu2", "nu4"] {
                v.push(build(&FamilySpec::plain(fam, n)).unwrap());
            }
        }
        v
    };
    // d o d = 0 for 100 random degree-1 cochains
    let mut ok = 0usize;
    for _ in 0..100 {
        let idx = r.rng.gen_range(0..pool.len());
        let a = &pool[idx];
        let n = a.dim();
        let mut f = Cochain::zero(1, n);
        for u in 0..n {
            for t in 0..n {
                f.set_coeff(&[u], t, r.rand_q());
            }
        }
        if coboundary(a, &coboundary(a, &f)).is_zero() {
            ok += 1;
        }
    }
    r.push(
        "d.d=0",
        "complex property",
        "100/100 vanish".into(),
        format!("{ok}/100 vanish"),
    );
    // BL2 in ZL2 and rank-nullity dim BL2 + dim Der = n^2
    let mut contained = true;
    let mut rank_ok = true;
    for a in &pool {
        let n = a.dim();
        let z = zl2(a).unwrap();
        let b = bl2(a).unwrap();
        if !b.is_subspace_of(&z).unwrap() {
            contained = false;
        }
        if b.dim() + derivation_space(a).dim() != n * n {
            rank_ok = false;
        }
    }
    r.push(
        "BL2subZL2",
        "complex property",
        "always".into(),
        if contained { "always" } else { "violated" }.to_string(),
    );
    r.push(
        "RankNullity",
        "dim BL2 + dim Der = n^2",
        "always".into(),
        if rank_ok { "always" } else { "violated" }.to_string(),
    );
    // Prop 3.20 shape of ZL2(F3(0)) basis cocycles
    let mut shape_ok = true;
    for n in n_lo..=cap {
        let a = build(&FamilySpec::plain("F3graded", n)).unwrap();
        let z = zl2(&a).unwrap();
        for row in z.basis_rows() {
            let phi = Cochain::from_flat(2, n, row).unwrap();
            for i in 0..n {
                for j in 0..n {
                    let mut sym: Vec<Q> = phi.value(&[i, j]);
                    let ji = phi.value(&[j, i]);
                    for k in 0..n {
                        sym[k] = sym[k].clone() + ji[k].clone();
                    }
                    let lie_part = i < 2 && j < 2;
                    for (k, v) in sym.iter().enumerate() {
                        let allowed = lie_part && k == n - 1;
                        if !allowed && !v.is_zero() {
                            shape_ok = false;
                        }
                    }
                }
            }
        }
    }
    r.push(
        "Prop3.20",
        "Prop3.20 shape of ZL2(F3(0))",
        "all basis cocycles conform".into(),
        if shape_ok {
            "all basis cocycles conform"
        } else {
            "violated"
        }
        .to_string(),
    );
    // Ann_r closure: [x,x] and [x,y]+[y,x] lie in Ann_r
    let mut ann_ok = true;
    for a in &pool {
        let n = a.dim();
        let ann = a.right_annihilator();
        for i in 0..n {
            for j in 0..n {
                let mut sym = a.bracket(&unit(n, i), &unit(n, j)).unwrap();
                let ji = a.bracket(&unit(n, j), &unit(n, i)).unwrap();
                for k in 0..n {
                    sym[k] = sym[k].clone() + ji[k].clone();
                }
                if !ann.contains(&sym).unwrap() {
                    ann_ok = false;
                }
            }
        }
    }
    r.push(
        "AnnrClosure",
        "squares and symmetric brackets annihilate",
        "always".into(),
        if ann_ok { "always" } else { "violated" }.to_string(),
    );
}
