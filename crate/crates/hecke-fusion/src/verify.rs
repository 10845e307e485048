//! Named verification suites: every closed-form identity the library
//! implements, run exhaustively up to a size bound with exact equality.
//! Each check is labelled so a failure points at one specific claim.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{evaluation_murphy, AlgebraElement};
use crate::combinatorics::{
    hook_scalar, hook_scalar_negative_form, hook_scalar_positive_form, mixed_hook_ratio,
    skew_cancellation_check, Partition, Permutation, StandardTableau,
};
use crate::error::Error;
use crate::fusion::{
    baxter_factor, check_row_transfer_identity, check_row_transfer_shift,
    check_seminormal_scalar_identity, check_singular_pair_regularization,
    check_swap_ladder_identity, check_symmetrizer_factorization, diagonal_element, fused_element,
    fused_via_transport, h_from_idempotency, seminormal_element, seminormal_element_direct,
    unitarity_scalar,
};
use crate::intertwiner::{
    admissible_column_insertions, admissible_row_insertions, check_crossing_relations,
    check_exchange_relation, check_j_commutes, check_mixed_hook_factorization,
    check_murphy_factored_form, eigenvalue_column_insertion, eigenvalue_row_insertion,
    explicit_eigenvector, induced_dimension, intertwiner_right_element, j_matrix, span_induced,
    verify_eigen_det, InducedSetup,
};

use crate::scalars::{big_rat, RationalFunction};
use crate::seminormal::{
    build_rep, check_branching, check_coxeter_specialization, check_left_ideal_model,
    check_murphy_diagonal, check_trace_decomposition,
};

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: String,
    pub label: String,
    pub case: String,
    pub passed: bool,
    pub detail: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| !r.passed)
    }

    pub fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.results.extend(other.results);
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "[{status}] {}/{} {} ({} ms)\n",
                r.suite, r.label, r.case, r.millis
            ));
            if let Some(d) = &r.detail {
                if !r.passed {
                    out.push_str(&format!("       {d}\n"));
                }
            }
        }
        let failures = self.results.iter().filter(|r| !r.passed).count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.results.len(),
            failures
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.results.iter().map(|r| json!({
                "suite": r.suite,
                "label": r.label,
                "case": r.case,
                "passed": r.passed,
                "detail": r.detail,
                "millis": r.millis,
            })).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub lmax: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { lmax: 4, seed: 0 }
    }
}

type CaseFn = Box<dyn Fn() -> Result<bool, Error> + Send + Sync>;

struct Case {
    label: String,
    case: String,
    run: CaseFn,
}

fn case(label: &str, key: impl Into<String>, run: impl Fn() -> Result<bool, Error> + Send + Sync + 'static) -> Case {
    Case { label: label.to_string(), case: key.into(), run: Box::new(run) }
}

fn run_cases(suite: &str, cases: Vec<Case>) -> SuiteReport {
    let mut results: Vec<CheckResult> = cases
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let (passed, detail) = match (c.run)() {
                Ok(ok) => (ok, if ok { None } else { Some("identity refuted".to_string()) }),
                Err(e) => (false, Some(e.to_string())),
            };
            CheckResult {
                suite: suite.to_string(),
                label: c.label,
                case: c.case,
                passed,
                detail,
                millis: start.elapsed().as_millis(),
            }
        })
        .collect();
    results.sort_by(|a, b| (&a.label, &a.case).cmp(&(&b.label, &b.case)));
    SuiteReport { results }
}

/// Deterministic generator for the randomized spot checks.
pub struct SpotRng(u64);

impl SpotRng {
    pub fn new(seed: u64) -> Self {
        SpotRng(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next() % span) as i64
    }

    pub fn rational_function(&mut self) -> RationalFunction {
        let mut out = RationalFunction::zero();
        for _ in 0..self.int(1, 3) {
            let e = self.int(-2, 2);
            let mut c = self.int(-3, 3);
            if c == 0 {
                c = 1;
            }
            out = out.add_ref(&RationalFunction::monomial(e, big_rat(c, 1)));
        }
        if out.is_zero() {
            RationalFunction::one()
        } else {
            out
        }
    }

    pub fn element(&mut self, rank: usize, perms: &[Permutation]) -> AlgebraElement {
        let mut out = AlgebraElement::zero(rank);
        for _ in 0..self.int(1, 3) {
            let p = perms[self.next() as usize % perms.len()].clone();
            out = out.add(&AlgebraElement::term(rank, p, self.rational_function()));
        }
        if out.is_zero() {
            AlgebraElement::unit(rank)
        } else {
            out
        }
    }
}

fn all_shapes(max_boxes: usize) -> Vec<Partition> {
    (1..=max_boxes).flat_map(Partition::all).collect()
}

fn all_tableaux(max_boxes: usize) -> Vec<StandardTableau> {
    all_shapes(max_boxes)
        .iter()
        .flat_map(StandardTableau::enumerate)
        .collect()
}

/// Defining relations, inverses, Murphy identities, structural morphisms.
pub fn presentation_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut cases = Vec::new();
    let u = RationalFunction::q_minus_qinv();
    for rank in 2..=opts.lmax {
        for i in 1..rank {
            let u = u.clone();
            cases.push(case("quadratic-relation", format!("rank={rank},i={i}"), move || {
                let t = AlgebraElement::gen(rank, i);
                Ok(t.mul(&t) == AlgebraElement::unit(rank).add(&t.scale(&u)))
            }));
            cases.push(case("generator-inverse", format!("rank={rank},i={i}"), move || {
                let t: AlgebraElement = AlgebraElement::gen(rank, i);
                Ok(t.mul(&AlgebraElement::inv_gen(rank, i)) == AlgebraElement::unit(rank))
            }));
        }
        for i in 1..rank.saturating_sub(1) {
            cases.push(case("braid-relation", format!("rank={rank},i={i}"), move || {
                let a: AlgebraElement = AlgebraElement::gen(rank, i);
                let b = AlgebraElement::gen(rank, i + 1);
                Ok(a.mul(&b).mul(&a) == b.mul(&a).mul(&b))
            }));
        }
        for i in 1..rank {
            for j in (i + 2)..rank {
                cases.push(case("commutation-relation", format!("rank={rank},i={i},j={j}"), move || {
                    let a: AlgebraElement = AlgebraElement::gen(rank, i);
                    let b = AlgebraElement::gen(rank, j);
                    Ok(a.mul(&b) == b.mul(&a))
                }));
            }
        }
        cases.push(case("murphy-commute", format!("rank={rank}"), move || {
            let xs: Vec<AlgebraElement> = (1..=rank).map(|i| AlgebraElement::murphy(rank, i)).collect();
            for a in 0..xs.len() {
                for b in (a + 1)..xs.len() {
                    if xs[a].mul(&xs[b]) != xs[b].mul(&xs[a]) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }));
        for i in 1..rank {
            cases.push(case("murphy-evaluation-step", format!("rank={rank},i={i}"), move || {
                let z = RationalFunction::from_integer(3);
                let t: AlgebraElement = AlgebraElement::gen(rank, i);
                let lhs = t.mul(&evaluation_murphy(rank, i, &z)?).mul(&t);
                Ok(lhs == evaluation_murphy(rank, i + 1, &z)?)
            }));
        }
        let seed = opts.seed ^ rank as u64;
        cases.push(case("antiauto-spot", format!("rank={rank}"), move || {
            let perms = Permutation::all(rank.min(4));
            let r = rank.min(4);
            let mut rng = SpotRng::new(seed);
            for _ in 0..4 {
                let a = rng.element(r, &perms);
                let b = rng.element(r, &perms);
                if a.mul(&b).antiauto() != b.antiauto().mul(&a.antiauto()) {
                    return Ok(false);
                }
                if a.antiauto().antiauto() != a {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
        cases.push(case("sign-twist-spot", format!("rank={rank}"), move || {
            let r = rank.min(4);
            let perms = Permutation::all(r);
            let mut rng = SpotRng::new(seed.wrapping_add(1));
            for _ in 0..4 {
                let a = rng.element(r, &perms);
                let b = rng.element(r, &perms);
                if a.mul(&b).bar_negate() != a.bar_negate().mul(&b.bar_negate()) {
                    return Ok(false);
                }
                if a.add(&b).bar_negate() != a.bar_negate().add(&b.bar_negate()) {
                    return Ok(false);
                }
                if a.bar_negate().bar_negate() != a {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
    }
    for rank in 2..=opts.lmax.min(4) {
        cases.push(case("basis-inverse", format!("rank={rank}"), move || {
            for sigma in Permutation::all(rank) {
                let prod: AlgebraElement = AlgebraElement::t_word(rank, &sigma)
                    .mul(&AlgebraElement::inv_basis(rank, &sigma));
                if prod != AlgebraElement::unit(rank) {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
        cases.push(case("center-spot", format!("rank={rank}"), move || {
            let xs: Vec<AlgebraElement> = (1..=rank).map(|i| AlgebraElement::murphy(rank, i)).collect();
            let mut e1 = AlgebraElement::zero(rank);
            for x in &xs {
                e1 = e1.add(x);
            }
            let mut e2 = AlgebraElement::zero(rank);
            for a in 0..rank {
                for b in (a + 1)..rank {
                    e2 = e2.add(&xs[a].mul(&xs[b]));
                }
            }
            for k in 1..rank {
                let t: AlgebraElement = AlgebraElement::gen(rank, k);
                if t.mul(&e1) != e1.mul(&t) || t.mul(&e2) != e2.mul(&t) {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
    }
    run_cases("presentation", cases)
}

/// Fused elements, their eigen-relations and transports, seminormal
/// elements, hook scalars, symmetrizers.
pub fn fusion_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut cases: Vec<Case> = Vec::new();
    cases.push(case("singular-pair-regularization", "symbolic", || {
        Ok(check_singular_pair_regularization())
    }));
    cases.push(case("baxter-unitarity", "q-powers", || {
        for (a, b) in [(0i64, 2i64), (2, -2), (4, -2), (-4, 6)] {
            let x = RationalFunction::q_pow(a);
            let y = RationalFunction::q_pow(b);
            let lhs = baxter_factor(2, 1, &x, &y)?.mul(&baxter_factor(2, 1, &y, &x)?);
            if lhs != AlgebraElement::scalar(2, unitarity_scalar(&x, &y)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }));
    for rank in 3..=opts.lmax.min(5) {
        cases.push(case("yang-baxter", format!("rank={rank}"), move || {
            for i in 1..rank - 1 {
                let x = RationalFunction::q_pow(2).mul_ref(&RationalFunction::from_integer(2));
                let y = RationalFunction::q_pow(-2).mul_ref(&RationalFunction::from_integer(3));
                let z = RationalFunction::q_pow(4).mul_ref(&RationalFunction::from_integer(5));
                let lhs = baxter_factor(rank, i, &x, &y)?
                    .mul(&baxter_factor(rank, i + 1, &x, &z)?)
                    .mul(&baxter_factor(rank, i, &y, &z)?);
                let rhs = baxter_factor(rank, i + 1, &y, &z)?
                    .mul(&baxter_factor(rank, i, &x, &z)?)
                    .mul(&baxter_factor(rank, i + 1, &x, &y)?);
                if lhs != rhs {
                    return Ok(false);
                }
                if i + 2 < rank {
                    let a = baxter_factor(rank, i, &x, &y)?;
                    let b = baxter_factor(rank, i + 2, &z, &x)?;
                    if a.mul(&b) != b.mul(&a) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }));
    }
    for tab in all_tableaux(opts.lmax.min(5)) {
        let l = tab.size();
        let key = format!("shape={},tableau={}", tab.shape(), tab);
        {
            let tab = tab.clone();
            cases.push(case("fusion-limit", key.clone(), move || {
                Ok(!fused_element(&tab)?.is_zero())
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("longest-word-coefficient", key.clone(), move || {
                let f = fused_element(&tab)?;
                Ok(f.coefficient(&Permutation::longest(l)) == RationalFunction::one())
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("antiauto-invariance", key.clone(), move || {
                let f = fused_element(&tab)?;
                let e = f.mul(&AlgebraElement::inv_basis(l, &Permutation::longest(l)));
                Ok(e.antiauto() == e)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("neighbour-eigen-relations", key.clone(), move || {
                let f = fused_element(&tab)?;
                for k in 1..l {
                    let (a1, b1) = tab.node(k);
                    let (a2, b2) = tab.node(k + 1);
                    let t: AlgebraElement = AlgebraElement::gen(l, k);
                    if a1 == a2 && b2 == b1 + 1 {
                        if t.mul(&f) != f.scale(&RationalFunction::q_pow(1)) {
                            return Ok(false);
                        }
                    }
                    if b1 == b2 && a2 == a1 + 1 {
                        if t.mul(&f) != f.scale(&RationalFunction::q_pow(-1).neg_ref()) {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("transport-agreement", key.clone(), move || {
                Ok(fused_via_transport(&tab)? == fused_element(&tab)?)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("swap-ladder-identity", key.clone(), move || {
                check_swap_ladder_identity(&tab)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("seminormal-direct-agreement", key.clone(), move || {
                Ok(seminormal_element(&tab)? == seminormal_element_direct(&tab)?)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("seminormal-scalar-identity", key.clone(), move || {
                check_seminormal_scalar_identity(&tab)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("seminormal-leading-term", key.clone(), move || {
                let g = seminormal_element(&tab)?;
                let target = tab.rho().compose(&Permutation::longest(l));
                if g.coefficient(&target) != RationalFunction::one() {
                    return Ok(false);
                }
                let ok = g.terms().all(|(p, _)| p == &target || p.length() < target.length());
                Ok(ok)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("murphy-eigen-seminormal", key.clone(), move || {
                let g = seminormal_element(&tab)?;
                for i in 1..=l {
                    let lhs = AlgebraElement::murphy(l, i).mul(&g);
                    if lhs != g.scale(&RationalFunction::q_pow(2 * tab.content(i))) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("q1-regularity", key.clone(), move || {
                let one = big_rat(1, 1);
                Ok(fused_element(&tab)?.specialize_q(&one).is_ok()
                    && seminormal_element(&tab)?.specialize_q(&one).is_ok())
            }));
        }
        for z in [3i64, 5] {
            let tab2 = tab.clone();
            cases.push(case("row-transfer-closed-form", format!("{key},z={z}"), move || {
                check_row_transfer_identity(&tab2, &RationalFunction::from_integer(z))
            }));
            let tab2 = tab.clone();
            cases.push(case("row-transfer-shift", format!("{key},z={z}"), move || {
                check_row_transfer_shift(&tab2, &RationalFunction::from_integer(z))
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("hook-idempotency", key.clone(), move || {
                Ok(h_from_idempotency(&tab)? == hook_scalar(tab.shape()))
            }));
        }
        {
            let tab = tab.clone();
            cases.push(case("diagonal-two-sided", key.clone(), move || {
                let e = diagonal_element(&tab)?;
                for i in 1..=l {
                    let x = AlgebraElement::murphy(l, i);
                    let scaled = e.scale(&RationalFunction::q_pow(2 * tab.content(i)));
                    if x.mul(&e) != scaled || e.mul(&x) != scaled {
                        return Ok(false);
                    }
                }
                let expansion = e.expand_inverse_basis();
                Ok(expansion.get(&Permutation::identity(l)) == Some(&RationalFunction::one()))
            }));
        }
        if l <= 4 {
            let tab = tab.clone();
            cases.push(case("sign-twist-transpose", key.clone(), move || {
                let f = fused_element(&tab)?;
                let transposed = fused_element(&tab.transpose())?;
                let sign = if (l * (l - 1) / 2) % 2 == 0 { 1 } else { -1 };
                Ok(f.bar_negate() == transposed.scale(&RationalFunction::from_integer(sign)))
            }));
        }
    }
    for lam in all_shapes(opts.lmax.min(5)) {
        let key = format!("shape={lam}");
        {
            let lam = lam.clone();
            cases.push(case("hook-forms-agree", key.clone(), move || {
                Ok(hook_scalar_positive_form(&lam) == hook_scalar_negative_form(&lam))
            }));
        }
        {
            let lam = lam.clone();
            cases.push(case("hook-q1-specialization", key.clone(), move || {
                let h = hook_scalar(&lam).specialize(&big_rat(1, 1))?;
                let mut product = big_rat(1, 1);
                for (a, b) in lam.nodes() {
                    product *= big_rat(lam.hook_length(a, b) as i64, 1);
                }
                // the hook product is n! over the number of standard tableaux
                let mut factorial = big_rat(1, 1);
                for k in 1..=lam.size() {
                    factorial *= big_rat(k as i64, 1);
                }
                let f = big_rat(lam.num_standard_tableaux() as i64, 1);
                Ok(h == product && h * f == factorial)
            }));
        }
        if lam.size() <= opts.lmax.min(4) {
            let lam = lam.clone();
            cases.push(case("symmetrizer-factorization", key.clone(), move || {
                check_symmetrizer_factorization(&lam)
            }));
        }
    }
    for l in 1..=opts.lmax.min(4) {
        cases.push(case("symmetrizer-sum-identities", format!("rank={l}"), move || {
            let mut lhs1 = AlgebraElement::zero(l);
            let mut rhs1 = AlgebraElement::zero(l);
            let mut lhs2 = AlgebraElement::zero(l);
            let mut rhs2 = AlgebraElement::zero(l);
            for sigma in Permutation::all(l) {
                let len = sigma.length() as i64;
                let sign = RationalFunction::from_integer(if len % 2 == 0 { 1 } else { -1 });
                lhs1 = lhs1.add(&AlgebraElement::inv_basis(l, &sigma).scale(&RationalFunction::q_pow(-len)));
                rhs1 = rhs1.add(&AlgebraElement::t_word(l, &sigma).scale(&RationalFunction::q_pow(len)));
                lhs2 = lhs2.add(
                    &AlgebraElement::inv_basis(l, &sigma)
                        .scale(&RationalFunction::q_pow(len).mul_ref(&sign)),
                );
                rhs2 = rhs2.add(
                    &AlgebraElement::t_word(l, &sigma)
                        .scale(&RationalFunction::q_pow(-len).mul_ref(&sign)),
                );
            }
            let li = l as i64;
            Ok(lhs1 == rhs1.scale(&RationalFunction::q_pow(li * (1 - li)))
                && lhs2 == rhs2.scale(&RationalFunction::q_pow(li * (li - 1))))
        }));
    }
    run_cases("fusion", cases)
}

/// Representation matrices, diagonal family, branching, ideal model, trace
/// decomposition, q = 1 specialization.
pub fn seminormal_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut cases: Vec<Case> = Vec::new();
    for lam in all_shapes(opts.lmax.min(5)) {
        let key = format!("shape={lam}");
        {
            let lam = lam.clone();
            cases.push(case("relations", key.clone(), move || {
                Ok(build_rep(&lam)?.dimension() == lam.num_standard_tableaux())
            }));
        }
        {
            let lam = lam.clone();
            cases.push(case("murphy-diagonal", key.clone(), move || check_murphy_diagonal(&lam)));
        }
        {
            let lam = lam.clone();
            cases.push(case("branching", key.clone(), move || check_branching(&lam)));
        }
        {
            let lam = lam.clone();
            cases.push(case("coxeter-specialization", key.clone(), move || {
                check_coxeter_specialization(&lam)
            }));
        }
        if lam.size() <= opts.lmax.min(5) {
            let lam = lam.clone();
            cases.push(case("ideal-model", key.clone(), move || check_left_ideal_model(&lam)));
        }
    }
    for l in 1..=opts.lmax.min(4) {
        cases.push(case("trace-decomposition", format!("rank={l}"), move || {
            check_trace_decomposition(l)
        }));
    }
    run_cases("seminormal", cases)
}

fn partition_pairs(total_max: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for l in 1..total_max {
        for m in 1..=(total_max - l) {
            for lam in Partition::all(l) {
                for mu in Partition::all(m) {
                    out.push((lam.clone(), mu));
                }
            }
        }
    }
    out
}

/// Induced ideals, the exchange relation and its factored form, crossing
/// relations, dimensions, operator commutation, and every predicted
/// eigenvalue.
pub fn intertwiner_suite(opts: &VerifyOptions) -> SuiteReport {
    let mut cases: Vec<Case> = Vec::new();
    let total = opts.lmax.min(5);
    for l in 1..total {
        for m in 1..=(total - l) {
            cases.push(case("crossing-relations", format!("l={l},m={m}"), move || {
                check_crossing_relations(l, m)
            }));
        }
    }
    for (lam, mu) in partition_pairs(total) {
        for w in [3i64, 5] {
            let key = format!("lambda={lam},mu={mu},w={w}");
            {
                let (lam, mu) = (lam.clone(), mu.clone());
                cases.push(case("exchange-relation", key.clone(), move || {
                    for tab_l in StandardTableau::enumerate(&lam) {
                        for tab_m in StandardTableau::enumerate(&mu) {
                            let s = InducedSetup::new(
                                tab_l.clone(),
                                tab_m,
                                RationalFunction::one(),
                                RationalFunction::from_integer(w),
                            )?;
                            if !check_exchange_relation(&s)? {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                }));
            }
            {
                let (lam, mu) = (lam.clone(), mu.clone());
                cases.push(case("murphy-factored-form", key.clone(), move || {
                    for tab_l in StandardTableau::enumerate(&lam) {
                        for tab_m in StandardTableau::enumerate(&mu) {
                            let s = InducedSetup::new(
                                tab_l.clone(),
                                tab_m,
                                RationalFunction::one(),
                                RationalFunction::from_integer(w),
                            )?;
                            if !check_murphy_factored_form(&s)? {
                                return Ok(false);
                            }
                        }
                    }
                    Ok(true)
                }));
            }
            {
                let (lam, mu) = (lam.clone(), mu.clone());
                cases.push(case("induced-and-eigen", key.clone(), move || {
                    let s = InducedSetup::with_column_tableaux(
                        &lam,
                        &mu,
                        RationalFunction::one(),
                        RationalFunction::from_integer(w),
                    )?;
                    let report = span_induced(&s)?; // dimension enforced inside
                    if report.dimension != induced_dimension(&lam, &mu) {
                        return Ok(false);
                    }
                    let jm = j_matrix(&s, &report)?;
                    if !check_j_commutes(&s, &report, &jm)? {
                        return Ok(false);
                    }
                    let t = s.ratio();
                    let r_el = intertwiner_right_element(&s)?;
                    for rows in admissible_row_insertions(&lam, &mu) {
                        let r = eigenvalue_row_insertion(&lam, &mu, &rows, &t)?;
                        if !verify_eigen_det(&jm, &r) {
                            return Ok(false);
                        }
                        let v = explicit_eigenvector(&lam, &mu, &rows, &s.tab_m, &s.z, &s.w)?;
                        if !report.solver().contains(&v) {
                            return Ok(false);
                        }
                        if v.mul(&r_el) != v.scale(&r) {
                            return Ok(false);
                        }
                    }
                    for cols in admissible_column_insertions(&lam, &mu) {
                        let r = eigenvalue_column_insertion(&lam, &mu, &cols, &t)?;
                        if !verify_eigen_det(&jm, &r) {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }));
            }
            {
                // swapping to other tableaux leaves the eigenvalue set valid
                let (lam, mu) = (lam.clone(), mu.clone());
                cases.push(case("eigen-tableau-independence", key.clone(), move || {
                    let tabs_l = StandardTableau::enumerate(&lam);
                    let tabs_m = StandardTableau::enumerate(&mu);
                    if tabs_l.len() == 1 && tabs_m.len() == 1 {
                        return Ok(true);
                    }
                    let s = InducedSetup::new(
                        tabs_l.last().expect("nonempty").clone(),
                        tabs_m.last().expect("nonempty").clone(),
                        RationalFunction::one(),
                        RationalFunction::from_integer(w),
                    )?;
                    let report = span_induced(&s)?;
                    let jm = j_matrix(&s, &report)?;
                    let t = s.ratio();
                    for rows in admissible_row_insertions(&lam, &mu) {
                        let r = eigenvalue_row_insertion(&lam, &mu, &rows, &t)?;
                        if !verify_eigen_det(&jm, &r) {
                            return Ok(false);
                        }
                    }
                    for cols in admissible_column_insertions(&lam, &mu) {
                        let r = eigenvalue_column_insertion(&lam, &mu, &cols, &t)?;
                        if !verify_eigen_det(&jm, &r) {
                            return Ok(false);
                        }
                    }
                    Ok(true)
                }));
            }
        }
        {
            let (lam, mu) = (lam.clone(), mu.clone());
            let key = format!("lambda={lam},mu={mu}");
            cases.push(case("mixed-hook-factorization", key, move || {
                let overlap: usize = (1..=lam.num_rows())
                    .map(|a| lam.part(a).min(mu.part(a)))
                    .sum();
                let points = 2 * overlap + 2;
                let mut t_val = 2i64;
                let mut used = 0;
                while used < points {
                    let t = RationalFunction::from_integer(t_val);
                    if !check_mixed_hook_factorization(&lam, &mu, &t)? {
                        return Ok(false);
                    }
                    used += 1;
                    t_val += 1;
                }
                Ok(true)
            }));
        }
    }
    for lam in all_shapes(opts.lmax.min(6)) {
        for m in 1..=lam.size() {
            for mu in Partition::all(m) {
                if lam.contains(&mu) {
                    let (lam2, mu2) = (lam.clone(), mu.clone());
                    cases.push(case(
                        "skew-product-trivial",
                        format!("lambda={lam},mu={mu}"),
                        move || skew_cancellation_check(&lam2, &mu2, &RationalFunction::from_integer(7)),
                    ));
                }
            }
        }
    }
    run_cases("intertwiner", cases)
}

/// Controls that must refute: perturbing a coefficient or a predicted
/// eigenvalue by q makes the corresponding check fail.
pub fn negative_controls(_opts: &VerifyOptions) -> SuiteReport {
    let mut cases: Vec<Case> = Vec::new();
    let q = RationalFunction::q_pow(1);
    {
        let q = q.clone();
        cases.push(case("quadratic-relation-perturbed", "rank=2", move || {
            let t: AlgebraElement = AlgebraElement::gen(2, 1);
            let rhs = AlgebraElement::unit(2)
                .add(&t.scale(&RationalFunction::q_minus_qinv()))
                .scale(&q);
            Ok(t.mul(&t) != rhs)
        }));
    }
    {
        let q = q.clone();
        cases.push(case("braid-relation-perturbed", "rank=3", move || {
            let a: AlgebraElement = AlgebraElement::gen(3, 1);
            let b = AlgebraElement::gen(3, 2);
            Ok(a.mul(&b).mul(&a) != b.mul(&a).mul(&b).scale(&q))
        }));
    }
    {
        let q = q.clone();
        cases.push(case("unitarity-perturbed", "q-powers", move || {
            // separated exponents keep the scalar nonzero, so the q twist shows
            let x = RationalFunction::q_pow(0);
            let y = RationalFunction::q_pow(4);
            let lhs = baxter_factor(2, 1, &x, &y)?.mul(&baxter_factor(2, 1, &y, &x)?);
            Ok(lhs != AlgebraElement::scalar(2, unitarity_scalar(&x, &y)?.mul_ref(&q)))
        }));
    }
    {
        let q = q.clone();
        cases.push(case("hook-idempotency-perturbed", "shape=2", move || {
            let tab = StandardTableau::row_tableau(&Partition::new(vec![2]).unwrap());
            let e = diagonal_element(&tab)?;
            let h = h_from_idempotency(&tab)?;
            Ok(e.mul(&e) != e.scale(&h.mul_ref(&q)))
        }));
    }
    {
        let q = q.clone();
        cases.push(case("murphy-eigen-perturbed", "shape=2", move || {
            let tab = StandardTableau::row_tableau(&Partition::new(vec![2]).unwrap());
            let g = seminormal_element(&tab)?;
            let lhs = AlgebraElement::murphy(2, 2).mul(&g);
            Ok(lhs != g.scale(&RationalFunction::q_pow(2).mul_ref(&q)))
        }));
    }
    {
        let q = q.clone();
        cases.push(case("eigenvalue-determinant-perturbed", "lambda=1,mu=1", move || {
            let lam = Partition::new(vec![1]).unwrap();
            let s = InducedSetup::with_column_tableaux(
                &lam,
                &lam,
                RationalFunction::one(),
                RationalFunction::from_integer(5),
            )?;
            let report = span_induced(&s)?;
            let jm = j_matrix(&s, &report)?;
            let t = s.ratio();
            for rows in admissible_row_insertions(&lam, &lam) {
                let r = eigenvalue_row_insertion(&lam, &lam, &rows, &t)?;
                if verify_eigen_det(&jm, &r.mul_ref(&q)) {
                    return Ok(false);
                }
            }
            Ok(true)
        }));
    }
    cases.push(case("eigenvalue-determinant-perturbed", "lambda=2,mu=1", move || {
        let lam = Partition::new(vec![2]).unwrap();
        let mu = Partition::new(vec![1]).unwrap();
        let s = InducedSetup::with_column_tableaux(
            &lam,
            &mu,
            RationalFunction::one(),
            RationalFunction::from_integer(3),
        )?;
        let report = span_induced(&s)?;
        let jm = j_matrix(&s, &report)?;
        let t = s.ratio();
        let r = eigenvalue_row_insertion(&lam, &mu, &[1], &t)?;
        Ok(!verify_eigen_det(&jm, &r.mul_ref(&RationalFunction::q_pow(1))))
    }));
    {
        let q = q.clone();
        cases.push(case("exchange-relation-perturbed", "lambda=1,mu=1", move || {
            let lam = Partition::new(vec![1]).unwrap();
            let s = InducedSetup::with_column_tableaux(
                &lam,
                &lam,
                RationalFunction::one(),
                RationalFunction::from_integer(5),
            )?;
            let lhs = s.generator.mul(&crate::intertwiner::intertwiner_element(&s)?);
            let rhs = crate::intertwiner::intertwiner_element_swapped(&s)?
                .mul(&s.swapped_generator()?)
                .scale(&q);
            Ok(lhs != rhs)
        }));
    }
    {
        let q = q.clone();
        cases.push(case("crossing-relation-perturbed", "l=2,m=1", move || {
            let tau = crate::combinatorics::tau_permutation(2, 1);
            let t_tau = AlgebraElement::t_word(3, &tau);
            let lhs = AlgebraElement::gen(3, 1).mul(&t_tau);
            let rhs = t_tau.mul(&AlgebraElement::gen(3, 2)).scale(&q);
            Ok(lhs != rhs)
        }));
    }
    {
        cases.push(case("trace-decomposition-perturbed", "rank=2", move || {
            // scaling one hook coefficient by q breaks the expansion at the identity
            let row = Partition::new(vec![2]).unwrap();
            let col = Partition::new(vec![1, 1]).unwrap();
            let h_row_inv = hook_scalar(&row).inv()?.mul_ref(&RationalFunction::q_pow(1));
            let h_col_inv = hook_scalar(&col).inv()?;
            let rep_row = build_rep(&row)?;
            let rep_col = build_rep(&col)?;
            let unit = AlgebraElement::unit(2);
            let total = rep_row
                .character(&unit)?
                .mul_ref(&h_row_inv)
                .add_ref(&rep_col.character(&unit)?.mul_ref(&h_col_inv));
            Ok(total != RationalFunction::one())
        }));
    }
    {
        cases.push(case("mixed-hook-factorization-perturbed", "lambda=2,1,mu=2,1", move || {
            let lam = Partition::new(vec![2, 1]).unwrap();
            let t = RationalFunction::from_integer(5);
            let rows: Vec<usize> = vec![1, 2];
            let cols: Vec<usize> = vec![1, 2];
            let top = eigenvalue_row_insertion(&lam, &lam, &rows, &t)?;
            let bottom = eigenvalue_column_insertion(&lam, &lam, &cols, &t)?;
            let ratio = top
                .mul_ref(&bottom.inv()?)
                .mul_ref(&RationalFunction::q_pow(1));
            Ok(ratio != mixed_hook_ratio(&lam, &lam, &t)?)
        }));
    }
    run_cases("negative-controls", cases)
}

pub fn run_suite(name: &str, opts: &VerifyOptions) -> Result<SuiteReport, Error> {
    match name {
        "presentation" => Ok(presentation_suite(opts)),
        "fusion" => Ok(fusion_suite(opts)),
        "seminormal" => Ok(seminormal_suite(opts)),
        "intertwiner" => Ok(intertwiner_suite(opts)),
        "negative-controls" => Ok(negative_controls(opts)),
        "all" => Ok(presentation_suite(opts)
            .merge(fusion_suite(opts))
            .merge(seminormal_suite(opts))
            .merge(intertwiner_suite(opts))
            .merge(negative_controls(opts))),
        _ => Err(Error::argument(format!("unknown suite '{name}'"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_presentation_suite_passes() {
        let opts = VerifyOptions { lmax: 3, seed: 7 };
        let report = presentation_suite(&opts);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn negative_controls_pass() {
        let opts = VerifyOptions::default();
        let report = negative_controls(&opts);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn seminormal_suite_small() {
        let opts = VerifyOptions { lmax: 3, seed: 0 };
        let report = seminormal_suite(&opts);
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn report_rendering() {
        let opts = VerifyOptions { lmax: 2, seed: 0 };
        let report = presentation_suite(&opts);
        let text = report.render_text();
        assert!(text.contains("PASS"));
        let v = report.to_json();
        assert_eq!(v["passed"], true);
    }
}
