use crate::combinatorics::partition::Partition;
use crate::combinatorics::permutation::Permutation;
use crate::combinatorics::tableau::StandardTableau;
use crate::error::Error;
use crate::scalars::{Coefficient, RationalFunction};

/// Product over the nodes common to both diagrams of
/// (t - q^{-2(mu_a + lambda*_b - a - b + 1)}) / (t - q^{2(lambda_a + mu*_b - a - b + 1)}).
///
/// The exponents are the two kinds of mixed hook length at the node; both are
/// positive on the intersection, so no factor collapses.
pub fn mixed_hook_ratio<S: Coefficient>(
    lambda: &Partition,
    mu: &Partition,
    t: &S,
) -> Result<S, Error> {
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut out = S::one();
    for (a, b) in lambda.nodes() {
        if b > mu.part(a) {
            continue;
        }
        let second = mu.part(a) as i64 + lc.part(b) as i64 - a as i64 - b as i64 + 1;
        let first = lambda.part(a) as i64 + mc.part(b) as i64 - a as i64 - b as i64 + 1;
        let numer = t.sub_ref(&S::embed(&RationalFunction::q_pow(-2 * second)));
        let denom = t.sub_ref(&S::embed(&RationalFunction::q_pow(2 * first)));
        if denom.is_zero() {
            return Err(Error::argument(format!(
                "t coincides with q^{} at node ({a},{b})",
                2 * first
            )));
        }
        out = out.mul_ref(&numer).mul_ref(&denom.inv()?);
    }
    Ok(out)
}

/// The hook scalar h_lambda(q), computed by two closed forms that are
/// asserted equal:
///
///   prod (1 - q^{2 h(a,b)}) / (1 - q^2)  * q^{sum_a lambda_a (1 - lambda_a)}
///   prod (1 - q^{-2 h(a,b)}) / (1 - q^-2) * q^{sum_b lambda*_b (lambda*_b - 1)}
///
/// where h(a,b) is the hook length. At q = 1 it specializes to the plain
/// hook-length product.
pub fn hook_scalar(lambda: &Partition) -> RationalFunction {
    let up = hook_scalar_positive_form(lambda);
    let down = hook_scalar_negative_form(lambda);
    assert_eq!(up, down, "the two hook-scalar evaluators disagree for {lambda}");
    up
}

pub fn hook_scalar_positive_form(lambda: &Partition) -> RationalFunction {
    let one = RationalFunction::one();
    let denom = one.sub_ref(&RationalFunction::q_pow(2));
    let mut out = RationalFunction::one();
    for (a, b) in lambda.nodes() {
        let h = lambda.hook_length(a, b) as i64;
        let numer = one.sub_ref(&RationalFunction::q_pow(2 * h));
        out = out.mul_ref(&numer.div_ref(&denom).expect("denominator is nonzero"));
    }
    let exp: i64 = lambda
        .parts()
        .iter()
        .map(|&p| p as i64 * (1 - p as i64))
        .sum();
    out.mul_ref(&RationalFunction::q_pow(exp))
}

pub fn hook_scalar_negative_form(lambda: &Partition) -> RationalFunction {
    let one = RationalFunction::one();
    let denom = one.sub_ref(&RationalFunction::q_pow(-2));
    let mut out = RationalFunction::one();
    for (a, b) in lambda.nodes() {
        let h = lambda.hook_length(a, b) as i64;
        let numer = one.sub_ref(&RationalFunction::q_pow(-2 * h));
        out = out.mul_ref(&numer.div_ref(&denom).expect("denominator is nonzero"));
    }
    let exp: i64 = lambda
        .conjugate()
        .parts()
        .iter()
        .map(|&p| p as i64 * (p as i64 - 1))
        .sum();
    out.mul_ref(&RationalFunction::q_pow(exp))
}

/// Product of the mixed-hook fractions over the skew diagram lambda / mu;
/// it telescopes to exactly 1.
pub fn skew_cancellation_check<S: Coefficient>(
    lambda: &Partition,
    mu: &Partition,
    t: &S,
) -> Result<bool, Error> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained { detail: format!("{mu} not inside {lambda}") });
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let mut out = S::one();
    for (a, b) in lambda.nodes() {
        if b <= mu.part(a) {
            continue;
        }
        let second = mu.part(a) as i64 + lc.part(b) as i64 - a as i64 - b as i64 + 1;
        let first = lambda.part(a) as i64 + mc.part(b) as i64 - a as i64 - b as i64 + 1;
        let numer = t.sub_ref(&S::embed(&RationalFunction::q_pow(-2 * second)));
        let denom = t.sub_ref(&S::embed(&RationalFunction::q_pow(2 * first)));
        out = out.mul_ref(&numer).mul_ref(&denom.inv()?);
    }
    Ok(out == S::one())
}

/// Append row a of `lambda` to row `rows[a-1]` of `mu`. The result must be
/// weakly decreasing; the first violated inequality is reported otherwise.
pub fn insert_rows(lambda: &Partition, mu: &Partition, rows: &[usize]) -> Result<Partition, Error> {
    let height = lambda.num_rows();
    if rows.len() != height {
        return Err(Error::InvalidInsertionSequence {
            detail: format!("need {height} distinct row indices, got {}", rows.len()),
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    for &r in rows {
        if r == 0 || !seen.insert(r) {
            return Err(Error::InvalidInsertionSequence {
                detail: format!("row indices must be distinct positive integers: {rows:?}"),
            });
        }
    }
    let max_row = rows.iter().copied().max().unwrap_or(0).max(mu.num_rows());
    let mut parts = vec![0usize; max_row];
    for (idx, slot) in parts.iter_mut().enumerate() {
        *slot = mu.part(idx + 1);
    }
    for (a0, &r) in rows.iter().enumerate() {
        parts[r - 1] += lambda.part(a0 + 1);
    }
    for i in 1..parts.len() {
        if parts[i - 1] < parts[i] {
            return Err(Error::InvalidInsertionSequence {
                detail: format!("inserted shape violates part {} >= part {}: {parts:?}", i, i + 1),
            });
        }
    }
    Partition::from_padded(parts)
}

/// Append column b of `lambda` to column `cols[b-1]` of `mu`, then conjugate
/// back.
pub fn insert_columns(lambda: &Partition, mu: &Partition, cols: &[usize]) -> Result<Partition, Error> {
    Ok(insert_rows(&lambda.conjugate(), &mu.conjugate(), cols)?.conjugate())
}

/// The standard tableau of the row-inserted shape that agrees with `tab_mu`
/// on the inner diagram and carries the blocks of the first shape in column
/// order, block by block.
pub fn insertion_tableau(
    lambda: &Partition,
    mu: &Partition,
    rows: &[usize],
    tab_mu: &StandardTableau,
) -> Result<StandardTableau, Error> {
    if tab_mu.shape() != mu {
        return Err(Error::argument("tableau shape does not match the inner partition"));
    }
    let xi = insert_rows(lambda, mu, rows)?;
    let m = mu.size();
    let col = StandardTableau::column_tableau(lambda);
    let lc = lambda.conjugate();
    let mut grid: Vec<Vec<usize>> = xi.parts().iter().map(|&len| vec![0; len]).collect();
    for (c, d) in mu.nodes() {
        grid[c - 1][d - 1] = tab_mu.entry(c, d);
    }
    // parts of lambda equal to j occupy rows lambda*_{j+1}+1 ..= lambda*_j;
    // reorder each block so smaller target rows receive earlier column blocks
    for j in 1..=lambda.part(1) {
        let lo = lc.part(j + 1) + 1;
        let hi = lc.part(j);
        if lo > hi {
            continue;
        }
        let mut block: Vec<usize> = (lo..=hi).collect();
        block.sort_by_key(|&a| rows[a - 1]);
        for (k0, &a) in block.iter().enumerate() {
            let target_row = rows[a - 1];
            for b in 1..=lambda.part(a) {
                grid[target_row - 1][mu.part(target_row) + b - 1] =
                    m + col.entry(lc.part(j + 1) + k0 + 1, b);
            }
        }
    }
    StandardTableau::from_rows(grid)
}

/// Which blocks of entries a Young subgroup preserves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Arrangement {
    /// Rows of the row tableau: consecutive blocks of sizes lambda_a.
    Rows,
    /// Columns of the row tableau.
    ColumnsOfRowTableau,
}

fn blocks(lambda: &Partition, arrangement: Arrangement) -> Vec<Vec<usize>> {
    let row_tab = StandardTableau::row_tableau(lambda);
    match arrangement {
        Arrangement::Rows => (1..=lambda.num_rows())
            .map(|a| (1..=lambda.part(a)).map(|b| row_tab.entry(a, b)).collect())
            .collect(),
        Arrangement::ColumnsOfRowTableau => {
            let conj = lambda.conjugate();
            (1..=lambda.num_cols())
                .map(|b| (1..=conj.part(b)).map(|a| row_tab.entry(a, b)).collect())
                .collect()
        }
    }
}

/// All permutations preserving each block; cardinality prod (block size)!.
pub fn young_subgroup_elements(lambda: &Partition, arrangement: Arrangement) -> Vec<Permutation> {
    let l = lambda.size();
    let blocks = blocks(lambda, arrangement);
    let mut elements = vec![Permutation::identity(l)];
    for block in blocks {
        let block_perms = Permutation::all(block.len());
        let mut next = Vec::with_capacity(elements.len() * block_perms.len());
        for base in &elements {
            for bp in &block_perms {
                let mut images = base.one_line().to_vec();
                for (pos, &entry) in block.iter().enumerate() {
                    images[entry - 1] = block[bp.apply(pos + 1) - 1];
                }
                next.push(Permutation::from_one_line(images).expect("block permutation"));
            }
        }
        elements = next;
    }
    elements.sort_by(|a, b| (a.length(), a.one_line().to_vec()).cmp(&(b.length(), b.one_line().to_vec())));
    elements
}

/// True iff the adjacent transposition (k, k+1) lies in the Young subgroup.
pub fn adjacent_in_young_subgroup(lambda: &Partition, arrangement: Arrangement, k: usize) -> bool {
    blocks(lambda, arrangement)
        .iter()
        .any(|block| block.contains(&k) && block.contains(&(k + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::big_rat;
    use crate::scalars::EpsilonFunction;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    #[test]
    fn mixed_hook_single_node_symbolic() {
        // symbolic t via the eps tower: (t - q^-2) / (t - q^2)
        let t = EpsilonFunction::eps();
        let got = mixed_hook_ratio(&p(&[1]), &p(&[1]), &t).unwrap();
        let num = t.sub_ref(&EpsilonFunction::constant(RationalFunction::q_pow(-2)));
        let den = t.sub_ref(&EpsilonFunction::constant(RationalFunction::q_pow(2)));
        assert_eq!(got, num.div_ref(&den).unwrap());
    }

    #[test]
    fn mixed_hook_single_common_node() {
        // diagrams of (3) and (1,1,1) overlap in the single node (1,1):
        // second kind 1 + 1 - 1 - 1 + 1 = 1, first kind 3 + 3 - 1 - 1 + 1 = 5
        let t = rf(5);
        let lam = p(&[3]);
        let mu = p(&[1, 1, 1]);
        let got = mixed_hook_ratio(&lam, &mu, &t).unwrap();
        let expected = t
            .sub_ref(&RationalFunction::q_pow(-2))
            .div_ref(&t.sub_ref(&RationalFunction::q_pow(10)))
            .unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn mixed_hook_matches_nested_loop_oracle() {
        let t = rf(5);
        let lam = p(&[2]);
        let mu = p(&[2]);
        // independent nested-loop evaluation
        let mut expected = RationalFunction::one();
        for a in 1..=2usize {
            for b in 1..=2usize {
                if b <= lam.part(a) && b <= mu.part(a) {
                    let lc = lam.conjugate();
                    let mc = mu.conjugate();
                    let e2 = mu.part(a) as i64 + lc.part(b) as i64 - (a + b) as i64 + 1;
                    let e1 = lam.part(a) as i64 + mc.part(b) as i64 - (a + b) as i64 + 1;
                    expected = expected
                        .mul_ref(&t.sub_ref(&RationalFunction::q_pow(-2 * e2)))
                        .div_ref(&t.sub_ref(&RationalFunction::q_pow(2 * e1)))
                        .unwrap();
                }
            }
        }
        assert_eq!(mixed_hook_ratio(&lam, &mu, &t).unwrap(), expected);
    }

    #[test]
    fn hook_scalar_small_shapes() {
        // oracles fixed by the rank-2 idempotency computations
        let expected_row = RationalFunction::one().add_ref(&RationalFunction::q_pow(-2));
        assert_eq!(hook_scalar(&p(&[2])), expected_row);
        let expected_col = RationalFunction::one().add_ref(&RationalFunction::q_pow(2));
        assert_eq!(hook_scalar(&p(&[1, 1])), expected_col);
    }

    #[test]
    fn hook_scalar_specializes_to_hook_product() {
        for n in 1..=6 {
            for lam in Partition::all(n) {
                let h = hook_scalar(&lam);
                let at_one = h.specialize(&big_rat(1, 1)).unwrap();
                let mut product = big_rat(1, 1);
                for (a, b) in lam.nodes() {
                    product *= big_rat(lam.hook_length(a, b) as i64, 1);
                }
                assert_eq!(at_one, product, "hook product for {lam}");
            }
        }
        assert_eq!(
            hook_scalar(&p(&[2, 1])).specialize(&big_rat(1, 1)).unwrap(),
            big_rat(3, 1)
        );
    }

    #[test]
    fn both_hook_forms_agree_up_to_eight() {
        for n in 1..=8 {
            for lam in Partition::all(n) {
                assert_eq!(
                    hook_scalar_positive_form(&lam),
                    hook_scalar_negative_form(&lam),
                    "forms disagree for {lam}"
                );
            }
        }
    }

    #[test]
    fn skew_product_is_one() {
        let t = rf(7);
        // equal shapes: empty skew diagram
        assert!(skew_cancellation_check(&p(&[2, 1]), &p(&[2, 1]), &t).unwrap());
        // two-factor cancellation by hand, symbolic t
        let sym = EpsilonFunction::eps();
        assert!(skew_cancellation_check(&p(&[2]), &p(&[1]), &sym).unwrap());
        // exhaustive over contained pairs
        for n in 1..=6 {
            for lam in Partition::all(n) {
                for m in 1..=n {
                    for mu in Partition::all(m) {
                        if lam.contains(&mu) {
                            assert!(
                                skew_cancellation_check(&lam, &mu, &t).unwrap(),
                                "skew product for {lam} / {mu}"
                            );
                        }
                    }
                }
            }
        }
        assert!(skew_cancellation_check(&p(&[1]), &p(&[2]), &t).is_err());
    }

    #[test]
    fn row_insertion_shapes() {
        assert_eq!(insert_rows(&p(&[1]), &p(&[1]), &[1]).unwrap(), p(&[2]));
        assert_eq!(insert_rows(&p(&[1]), &p(&[1]), &[2]).unwrap(), p(&[1, 1]));
        assert_eq!(insert_rows(&p(&[2, 1]), &p(&[2, 1]), &[1, 2]).unwrap(), p(&[4, 2]));
        // either order of a column pair works here since the parts agree
        assert_eq!(insert_rows(&p(&[1, 1]), &p(&[1]), &[2, 1]).unwrap(), p(&[2, 1]));
        // a long row appended below a short one violates monotonicity
        assert!(insert_rows(&p(&[2]), &p(&[1, 1]), &[2]).is_err());
        assert!(insert_rows(&p(&[1]), &p(&[1]), &[1, 1]).is_err());
    }

    #[test]
    fn column_insertion_shapes() {
        assert_eq!(insert_columns(&p(&[1]), &p(&[1]), &[1]).unwrap(), p(&[1, 1]));
        assert_eq!(
            insert_columns(&p(&[2, 1]), &p(&[2, 1]), &[1, 2]).unwrap(),
            p(&[2, 2, 1, 1])
        );
        // natural sequence: conjugate sum
        for lam in Partition::all(3) {
            for mu in Partition::all(3) {
                let cols: Vec<usize> = (1..=lam.part(1)).collect();
                let eta = insert_columns(&lam, &mu, &cols).unwrap();
                let sum = Partition::from_padded(
                    (1..=lam.size().max(mu.size()))
                        .map(|b| lam.conjugate().part(b) + mu.conjugate().part(b))
                        .collect(),
                )
                .unwrap();
                assert_eq!(eta, sum.conjugate());
            }
        }
    }

    #[test]
    fn insertion_tableau_is_standard() {
        let lam = p(&[2, 1]);
        let mu = p(&[2, 1]);
        let m_tab = StandardTableau::row_tableau(&mu);
        let xi_tab = insertion_tableau(&lam, &mu, &[1, 2], &m_tab).unwrap();
        assert_eq!(xi_tab.shape(), &p(&[4, 2]));
        // agrees with the inner tableau on the inner diagram
        for (c, d) in mu.nodes() {
            assert_eq!(xi_tab.entry(c, d), m_tab.entry(c, d));
        }
        // brute check over several insertions
        for lam in Partition::all(3) {
            for mu in Partition::all(2) {
                for m_tab in StandardTableau::enumerate(&mu) {
                    let height = lam.num_rows();
                    let bound = height + mu.num_rows() + 1;
                    let mut seqs = vec![Vec::new()];
                    for _ in 0..height {
                        let mut next = Vec::new();
                        for s in &seqs {
                            for r in 1..=bound {
                                if !s.contains(&r) {
                                    let mut t = s.clone();
                                    t.push(r);
                                    next.push(t);
                                }
                            }
                        }
                        seqs = next;
                    }
                    for seq in seqs {
                        if insert_rows(&lam, &mu, &seq).is_ok() {
                            let tab = insertion_tableau(&lam, &mu, &seq, &m_tab);
                            assert!(tab.is_ok(), "insertion {seq:?} of {lam} into {mu}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn young_subgroup_sizes() {
        assert_eq!(young_subgroup_elements(&p(&[1, 1, 1]), Arrangement::Rows).len(), 1);
        assert_eq!(young_subgroup_elements(&p(&[2]), Arrangement::Rows).len(), 2);
        let g = young_subgroup_elements(&p(&[2, 1]), Arrangement::Rows);
        assert_eq!(g.len(), 2);
        assert!(g[0].is_identity());
        assert_eq!(g[1], Permutation::adjacent(3, 1));
        // cardinality prod lambda_a!
        let g = young_subgroup_elements(&p(&[3, 2]), Arrangement::Rows);
        assert_eq!(g.len(), 12);
        // all elements preserve the row sets of the row tableau
        let lam = p(&[3, 2]);
        let row_tab = StandardTableau::row_tableau(&lam);
        for sigma in &g {
            for a in 1..=lam.num_rows() {
                let row: std::collections::BTreeSet<usize> =
                    (1..=lam.part(a)).map(|b| row_tab.entry(a, b)).collect();
                let image: std::collections::BTreeSet<usize> =
                    row.iter().map(|&e| sigma.apply(e)).collect();
                assert_eq!(row, image);
            }
        }
        let cols = young_subgroup_elements(&p(&[2, 1]), Arrangement::ColumnsOfRowTableau);
        assert_eq!(cols.len(), 2);
        assert!(adjacent_in_young_subgroup(&p(&[2, 1]), Arrangement::Rows, 1));
        assert!(!adjacent_in_young_subgroup(&p(&[2, 1]), Arrangement::Rows, 2));
    }
}
