use hypermat::characters::{
    euler_limit, fourier_partner, matrix_char_member, matrix_char_preimage,
    simple_char_multiplicity, EulerConfig,
};
use hypermat::notation::parse_triple;
use hypermat::orbits::{fourier, SimpleLabel};
use hypermat::quiver::{build_quiver, path_space};
use hypermat::schur::plethysm_2x2;
use hypermat::weights::{bott_normalize, triple_normalize, SignedWeight, TripleWeight, Weight};
use proptest::prelude::*;

fn weight(m: usize, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(lo..=hi, m).prop_map(Weight)
}

fn dominant(m: usize, lo: i64, hi: i64) -> impl Strategy<Value = Weight> {
    weight(m, lo, hi).prop_map(|mut w| {
        w.0.sort_unstable_by(|a, b| b.cmp(a));
        w
    })
}

fn triple(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = TripleWeight> {
    (
        dominant(2, lo, hi),
        dominant(2, lo, hi),
        dominant(n, lo, hi),
    )
        .prop_map(|(a, b, c)| TripleWeight { a, b, c })
}

proptest! {
    #[test]
    fn normalization_is_idempotent_and_degree_preserving(
        w in (1usize..=7).prop_flat_map(|m| weight(m, -20, 20))
    ) {
        if let SignedWeight::Nonzero { weight, .. } = bott_normalize(&w) {
            prop_assert_eq!(weight.size(), w.size());
            prop_assert!(weight.is_dominant());
            prop_assert_eq!(
                bott_normalize(&weight),
                SignedWeight::Nonzero { sign: 1, weight: weight.clone() }
            );
        }
    }

    #[test]
    fn triple_sign_is_the_product_of_factor_signs(
        t in (3usize..=6).prop_flat_map(|n| {
            (weight(2, -9, 9), weight(2, -9, 9), weight(n, -9, 9))
                .prop_map(|(a, b, c)| TripleWeight { a, b, c })
        })
    ) {
        let signs = [bott_normalize(&t.a).sign(), bott_normalize(&t.b).sign(), bott_normalize(&t.c).sign()];
        match triple_normalize(&t) {
            Some((s, _)) => prop_assert_eq!(s, signs.iter().product::<i64>()),
            None => prop_assert!(signs.contains(&0)),
        }
    }

    #[test]
    fn rank_strata_characters_are_disjoint_and_balanced(
        (n1, n2) in (1usize..=5).prop_flat_map(|n2| (n2..=6usize, Just(n2))),
        seed in prop::collection::vec(-8i64..=8, 6),
    ) {
        let mut l: Vec<i64> = seed[..n2].to_vec();
        l.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Weight(l);
        let mut images = Vec::new();
        for p in 0..=n2 {
            if let Some(mu) = matrix_char_member(p, n1, n2, &lambda) {
                prop_assert_eq!(mu.size(), lambda.size());
                prop_assert!(mu.is_dominant());
                prop_assert_eq!(matrix_char_preimage(p, n1, n2, &mu), Some(lambda.clone()));
                images.push(mu);
            }
        }
        // A weight of rank n₁ arises from at most one stratum.
        for (i, a) in images.iter().enumerate() {
            for b in &images[i + 1..] {
                prop_assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn plethysm_is_symmetric_and_dual(g in dominant(4, -3, 5)) {
        let d = plethysm_2x2(&g).unwrap();
        let dual = plethysm_2x2(&g.dual()).unwrap();
        for ((a, b), m) in &d.terms {
            prop_assert_eq!(d.mult(b, a), *m);
            prop_assert_eq!(dual.mult(&a.dual(), &b.dual()), *m);
        }
        prop_assert_eq!(d.terms.len(), dual.terms.len());
    }

    #[test]
    fn euler_limits_are_swap_symmetric(t in triple(3, -7, 1)) {
        for cfg in [EulerConfig::Y111, EulerConfig::Y222] {
            prop_assert_eq!(euler_limit(cfg, &t).ok(), euler_limit(cfg, &t.swap_ab()).ok());
        }
    }

    #[test]
    fn characters_commute_with_fourier(n in 3usize..=5, t in (3usize..=5).prop_flat_map(|n| triple(n, -8, 2))) {
        let _ = n;
        let n = t.n();
        for s in SimpleLabel::simples(n) {
            let f = fourier_partner(s, n).unwrap();
            let here = simple_char_multiplicity(s, &t).unwrap().multiplicity;
            let there = simple_char_multiplicity(f, &t.fourier()).unwrap().multiplicity;
            if let (Some(x), Some(y)) = (here, there) {
                prop_assert_eq!(x, y, "{} at {} against {} at {}", s, t, f, t.fourier());
            }
        }
    }

    #[test]
    fn triples_print_and_parse_back(t in (3usize..=6).prop_flat_map(|n| triple(n, -9, 9))) {
        prop_assert_eq!(parse_triple(&t.to_string(), t.n()).unwrap(), t);
    }
}

#[test]
fn path_spaces_are_fourier_symmetric() {
    for n in 3..=5 {
        let q = build_quiver(n).unwrap();
        for &i in &q.vertices {
            for &j in &q.vertices {
                let here = path_space(&q, i, j).unwrap().dim;
                let (fi, fj) = (fourier(i, n).unwrap(), fourier(j, n).unwrap());
                assert_eq!(
                    here,
                    path_space(&q, fi, fj).unwrap().dim,
                    "{i} -> {j} at n = {n}"
                );
                // Arrow reversal is an anti-automorphism.
                assert_eq!(
                    here,
                    path_space(&q, j, i).unwrap().dim,
                    "{i} -> {j} at n = {n}"
                );
            }
        }
    }
}
