//! Normal-form arithmetic in the finite Hecke algebra over Q(q): the T-basis
//! engine, Murphy elements, structural (anti)automorphisms, embeddings, and
//! the q-symmetrizers attached to a partition.

pub mod element;

pub use element::AlgebraElement;

use crate::combinatorics::{
    young_subgroup_elements, Arrangement, Partition, StandardTableau,
};
use crate:: scalars::RationalFunction;

/// z * X_i, the image of the i-th commuting generator under evaluation at z.
pub fn evaluation_murphy(
    rank: usize,
    i: usize,
    z: &RationalFunction,
) -> Result<AlgebraElement, crate::error::Error> {
    if z.is_zero() {
        return Err(crate::error::Error::argument("evaluation point must be nonzero"));
    }
    Ok(AlgebraElement::murphy(rank, i).scale(z))
}

/// Sum of q^{-l(sigma)} T_sigma^{-1} over the row Young subgroup. Satisfies
/// T_k P = q P for every generator inside the subgroup.
pub fn row_symmetrizer(lambda: &Partition) -> AlgebraElement {
    let l = lambda.size();
    let mut out = AlgebraElement::zero(l);
    for sigma in young_subgroup_elements(lambda, Arrangement::Rows) {
        let c = RationalFunction::q_pow(-(sigma.length() as i64));
        out = out.add(&AlgebraElement::inv_basis(l, &sigma).scale(&c));
    }
    out
}

/// Sum of (-q)^{l(sigma)} T_sigma^{-1} over the Young subgroup of the
/// conjugate shape (consecutive blocks of column sizes).
pub fn column_antisymmetrizer(lambda: &Partition) -> AlgebraElement {
    let l = lambda.size();
    let conj = lambda.conjugate();
    let mut out = AlgebraElement::zero(l);
    for sigma in young_subgroup_elements(&conj, Arrangement::Rows) {
        let len = sigma.length() as i64;
        let sign = if len % 2 == 0 { 1 } else { -1 };
        let c = RationalFunction::q_pow(len).mul_ref(&RationalFunction::from_integer(sign));
        out = out.add(&AlgebraElement::inv_basis(l, &sigma).scale(&c));
    }
    out
}

/// The full q-symmetrizer P T_{rho^-1}^{-1} Q T_{rho^-1} with rho the
/// row-tableau permutation.
pub fn young_symmetrizer(lambda: &Partition) -> AlgebraElement {
    let l = lambda.size();
    let rho_inv = StandardTableau::row_tableau(lambda).rho().inverse();
    let p = row_symmetrizer(lambda);
    let q = column_antisymmetrizer(lambda);
    p.mul(&AlgebraElement::inv_basis(l, &rho_inv))
        .mul(&q)
        .mul(&AlgebraElement::t_word(l, &rho_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;
    use crate::error::Error;
    use crate::scalars::big_rat;

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    fn q_pow(k: i64) -> RationalFunction {
        RationalFunction::q_pow(k)
    }

    fn u() -> RationalFunction {
        RationalFunction::q_minus_qinv()
    }

    type El = AlgebraElement<RationalFunction>;

    #[test]
    fn quadratic_relation() {
        // T_1 T_1 = 1 + (q - q^-1) T_1 in rank 2
        let t1 = El::gen(2, 1);
        let lhs = t1.mul(&t1);
        let rhs = El::unit(2).add(&t1.scale(&u()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unit_is_neutral() {
        let t1 = El::gen(3, 1);
        let a = t1.mul(&El::gen(3, 2)).add(&El::unit(3).scale(&q_pow(3)));
        assert_eq!(El::unit(3).mul(&a), a);
        assert_eq!(a.mul(&El::unit(3)), a);
    }

    #[test]
    fn braid_relation() {
        let t1 = El::gen(3, 1);
        let t2 = El::gen(3, 2);
        assert_eq!(t1.mul(&t2).mul(&t1), t2.mul(&t1).mul(&t2));
    }

    #[test]
    fn words_do_not_depend_on_the_reduced_decomposition() {
        // two words for the longest element of rank 3
        let a = El::unit(3).mul_word_right(&[1, 2, 1]);
        let b = El::unit(3).mul_word_right(&[2, 1, 2]);
        assert_eq!(a, b);
        assert_eq!(a, El::t_word(3, &Permutation::longest(3)));
    }

    #[test]
    fn t_word_degenerate_cases() {
        assert_eq!(El::t_word(2, &Permutation::identity(2)), El::unit(2));
        assert_eq!(El::t_word(2, &Permutation::longest(2)), El::gen(2, 1));
    }

    #[test]
    fn generator_inverse() {
        // T_1^{-1} = T_1 - q + q^-1
        let expected = El::gen(2, 1).add(&El::scalar(2, q_pow(-1).sub_ref(&q_pow(1))));
        assert_eq!(El::inv_gen(2, 1), expected);
        assert_eq!(El::gen(2, 1).mul(&El::inv_gen(2, 1)), El::unit(2));
    }

    #[test]
    fn basis_inverse_round_trip() {
        assert_eq!(El::inv_basis(3, &Permutation::identity(3)), El::unit(3));
        for sigma in Permutation::all(4) {
            let prod = El::t_word(4, &sigma).mul(&El::inv_basis(4, &sigma));
            assert_eq!(prod, El::unit(4), "inverse of {sigma}");
        }
    }

    #[test]
    fn murphy_base_cases() {
        assert_eq!(El::murphy(2, 1), El::unit(2));
        // X_2 = T_1^2 = 1 + (q - q^-1) T_1
        let expected = El::unit(2).add(&El::gen(2, 1).scale(&u()));
        assert_eq!(El::murphy(2, 2), expected);
    }

    #[test]
    fn murphy_commutativity_and_inverses() {
        for rank in 2..=4 {
            for i in 1..=rank {
                for j in 1..=rank {
                    let xi = El::murphy(rank, i);
                    let xj = El::murphy(rank, j);
                    assert_eq!(xi.mul(&xj), xj.mul(&xi), "commutativity at rank {rank}");
                }
                assert_eq!(
                    El::murphy(rank, i).mul(&El::murphy_inverse(rank, i)),
                    El::unit(rank)
                );
            }
            // T_i X_j = X_j T_i for j != i, i+1
            for i in 1..rank {
                for j in 1..=rank {
                    if j != i && j != i + 1 {
                        let t = El::gen(rank, i);
                        let x = El::murphy(rank, j);
                        assert_eq!(t.mul(&x), x.mul(&t));
                    }
                }
            }
        }
    }

    #[test]
    fn murphy_conjugation_under_evaluation() {
        // T_i (z X_i) T_i = z X_{i+1}
        let z = rf(3);
        for rank in 2..=4 {
            for i in 1..rank {
                let t = El::gen(rank, i);
                let lhs = t.mul(&evaluation_murphy(rank, i, &z).unwrap()).mul(&t);
                let rhs = evaluation_murphy(rank, i + 1, &z).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(evaluation_murphy(3, 2, &rf(1)).unwrap(), El::murphy(3, 2));
        assert_eq!(evaluation_murphy(3, 1, &rf(7)).unwrap(), El::unit(3).scale(&rf(7)));
        let z2 = q_pow(2);
        assert_eq!(
            evaluation_murphy(2, 2, &z2).unwrap(),
            El::murphy(2, 2).scale(&z2)
        );
        assert!(evaluation_murphy(2, 1, &RationalFunction::zero()).is_err());
    }

    #[test]
    fn antiautomorphism() {
        assert_eq!(El::gen(3, 1).antiauto(), El::gen(3, 1));
        // alpha(T_1 T_2) = T_2 T_1
        let t1t2 = El::gen(3, 1).mul(&El::gen(3, 2));
        let t2t1 = El::gen(3, 2).mul(&El::gen(3, 1));
        assert_eq!(t1t2.antiauto(), t2t1);
        // reverses products in general, is involutive, fixes Murphy elements
        let a = El::gen(3, 1).add(&El::murphy(3, 2).scale(&q_pow(2)));
        let b = El::gen(3, 2).mul(&El::gen(3, 1)).add(&El::unit(3).scale(&rf(5)));
        assert_eq!(a.mul(&b).antiauto(), b.antiauto().mul(&a.antiauto()));
        assert_eq!(a.antiauto().antiauto(), a);
        assert_eq!(El::murphy(3, 3).antiauto(), El::murphy(3, 3));
    }

    #[test]
    fn sign_twisted_automorphism() {
        assert_eq!(El::gen(2, 1).bar_negate(), El::gen(2, 1).neg());
        assert_eq!(
            El::unit(2).scale(&q_pow(1)).bar_negate(),
            El::unit(2).scale(&q_pow(-1))
        );
        // ring automorphism over Q and involutive
        let a = El::gen(3, 1).scale(&q_pow(2)).add(&El::unit(3).scale(&rf(3)));
        let b = El::gen(3, 2).mul(&El::gen(3, 1)).add(&El::gen(3, 1).scale(&u()));
        assert_eq!(a.mul(&b).bar_negate(), a.bar_negate().mul(&b.bar_negate()));
        assert_eq!(a.add(&b).bar_negate(), a.bar_negate().add(&b.bar_negate()));
        assert_eq!(a.bar_negate().bar_negate(), a);
    }

    #[test]
    fn embeddings() {
        let t1 = El::gen(2, 1);
        assert_eq!(t1.embed_low(3).unwrap(), El::gen(3, 1));
        assert_eq!(t1.embed_shift(1, 3).unwrap(), El::gen(3, 2));
        // shifted Murphy element: X_2 of rank 2 shifted by 2 is T_3^2 in rank 4
        let shifted = El::murphy(2, 2).embed_shift(2, 4).unwrap();
        let t3 = El::gen(4, 3);
        assert_eq!(shifted, t3.mul(&t3));
        // algebra morphism on a product
        let a = El::gen(2, 1).scale(&q_pow(1)).add(&El::unit(2));
        let prod = a.mul(&a);
        assert_eq!(
            prod.embed_shift(1, 4).unwrap(),
            a.embed_shift(1, 4).unwrap().mul(&a.embed_shift(1, 4).unwrap())
        );
        assert!(t1.embed_low(1).is_err());
        assert!(t1.embed_shift(3, 4).is_err());
    }

    #[test]
    fn rank_mismatch_reported() {
        let a = El::unit(2);
        let b = El::unit(3);
        assert_eq!(
            a.try_mul(&b),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn symmetrizer_eigen_relations() {
        // single column: trivial row subgroup
        let trivial = Partition::new(vec![1, 1, 1]).unwrap();
        assert_eq!(row_symmetrizer(&trivial), El::unit(3));
        // single row of size 2: P = 1 + q^-1 T_1^{-1}, T_1 P = q P
        let row2 = Partition::new(vec![2]).unwrap();
        let p = row_symmetrizer(&row2);
        let expected = El::unit(2).add(&El::inv_gen(2, 1).scale(&q_pow(-1)));
        assert_eq!(p, expected);
        assert_eq!(El::gen(2, 1).mul(&p), p.scale(&q_pow(1)));
        // its column antisymmetrizer is trivial
        assert_eq!(column_antisymmetrizer(&row2), El::unit(2));
        // eigen-relations for every partition of small sizes
        for n in 2..=4 {
            for lam in Partition::all(n) {
                let p = row_symmetrizer(&lam);
                let q_el = column_antisymmetrizer(&lam);
                for k in 1..n {
                    if crate::combinatorics::adjacent_in_young_subgroup(&lam, Arrangement::Rows, k) {
                        assert_eq!(El::gen(n, k).mul(&p), p.scale(&q_pow(1)));
                    }
                    if crate::combinatorics::adjacent_in_young_subgroup(
                        &lam.conjugate(),
                        Arrangement::Rows,
                        k,
                    ) {
                        assert_eq!(
                            El::gen(n, k).mul(&q_el),
                            q_el.scale(&q_pow(-1).neg_ref()),
                            "antisymmetrizer eigen-relation for {lam}, k = {k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn full_sum_identities() {
        // sum q^{-l} T^{-1} = q^{l(1-l)} sum q^{l} T
        // sum (-q)^{l} T^{-1} = (-q)^{l(l-1)} sum (-q)^{-l} T
        for n in 1..=4usize {
            let all = Permutation::all(n);
            let mut lhs1 = El::zero(n);
            let mut rhs1 = El::zero(n);
            let mut lhs2 = El::zero(n);
            let mut rhs2 = El::zero(n);
            for sigma in &all {
                let len = sigma.length() as i64;
                let sign = if len % 2 == 0 { rf(1) } else { rf(-1) };
                lhs1 = lhs1.add(&El::inv_basis(n, sigma).scale(&q_pow(-len)));
                rhs1 = rhs1.add(&El::t_word(n, sigma).scale(&q_pow(len)));
                lhs2 = lhs2.add(&El::inv_basis(n, sigma).scale(&q_pow(len).mul_ref(&sign)));
                rhs2 = rhs2.add(&El::t_word(n, sigma).scale(&q_pow(-len).mul_ref(&sign)));
            }
            let ni = n as i64;
            assert_eq!(lhs1, rhs1.scale(&q_pow(ni * (1 - ni))));
            let exp = ni * (ni - 1);
            // (-q)^{l(l-1)}: the exponent is even, so the sign drops
            assert_eq!(lhs2, rhs2.scale(&q_pow(exp)));
        }
    }

    #[test]
    fn center_spot_check() {
        // elementary symmetric functions of the Murphy elements are central
        for n in 2..=4usize {
            let xs: Vec<El> = (1..=n).map(|i| El::murphy(n, i)).collect();
            let mut e1 = El::zero(n);
            for x in &xs {
                e1 = e1.add(x);
            }
            let mut e2 = El::zero(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    e2 = e2.add(&xs[i].mul(&xs[j]));
                }
            }
            for k in 1..n {
                let t = El::gen(n, k);
                assert_eq!(t.mul(&e1), e1.mul(&t), "e1 central at rank {n}");
                assert_eq!(t.mul(&e2), e2.mul(&t), "e2 central at rank {n}");
            }
        }
    }

    #[test]
    fn coefficient_lookup() {
        assert_eq!(
            El::unit(2).coefficient(&Permutation::identity(2)),
            RationalFunction::one()
        );
        assert_eq!(
            El::gen(2, 1).coefficient(&Permutation::identity(2)),
            RationalFunction::zero()
        );
    }

    #[test]
    fn inverse_basis_expansion_is_triangular() {
        let a = El::inv_basis(3, &Permutation::longest(3)).scale(&q_pow(2)).add(
            &El::inv_basis(3, &Permutation::adjacent(3, 1)).scale(&rf(5)),
        );
        let exp = a.expand_inverse_basis();
        assert_eq!(exp.len(), 2);
        assert_eq!(exp[&Permutation::longest(3)], q_pow(2));
        assert_eq!(exp[&Permutation::adjacent(3, 1)], rf(5));
    }

    #[test]
    fn inverse_basis_expansion_round_trips() {
        // includes non-involutive words, where the leading term of
        // T_sigma^{-1} is T at the inverse permutation
        for sigma in Permutation::all(4) {
            let a = El::inv_basis(4, &sigma)
                .scale(&q_pow(1))
                .add(&El::t_word(4, &sigma))
                .add(&El::murphy(4, 3));
            let exp = a.expand_inverse_basis();
            let mut back = El::zero(4);
            for (p, c) in exp {
                back = back.add(&El::inv_basis(4, &p).scale(&c));
            }
            assert_eq!(back, a, "round trip through the inverse basis for {sigma}");
        }
    }

    #[test]
    fn element_specialization_at_one() {
        // T-basis coefficient of the quadratic relation at q = 1 recovers the
        // symmetric group: T_1^2 -> 1
        let sq = El::gen(3, 1).mul(&El::gen(3, 1));
        let spec = sq.specialize_q(&big_rat(1, 1)).unwrap();
        assert_eq!(spec.len(), 1);
        assert_eq!(spec[&Permutation::identity(3)], big_rat(1, 1));
    }

    #[test]
    fn json_round_trip() {
        let a = El::gen(3, 1)
            .mul(&El::gen(3, 2))
            .scale(&q_pow(-2))
            .add(&El::unit(3).scale(&rf(7)));
        let v = a.to_json();
        assert_eq!(El::from_json(&v).unwrap(), a);
    }
}
