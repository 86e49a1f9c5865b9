mod common;

use artin_core::dihedral::DihedralNF;
use artin_core::equality::words_equal;
use artin_core::parabolic::{conj_generators, extended_retraction, intersect_rewrite, oc_sets, ParabolicDescriptor};
use artin_core::retraction::{admits_ordinary_all, ordinary_map, DEFAULT_SUBSET_CAP};
use artin_core::{Label, LabeledGraph, VertexSet, Word};
use common::strategies::{graph, word};
use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn odd_odd_free_admissible(g: &LabeledGraph) -> bool {
    g.is_odd_odd_free() && admits_ordinary_all(g, DEFAULT_SUBSET_CAP).unwrap()
}

#[test]
fn oc_bijection_and_images_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let alphabet = labels(&[2, 3, 4, 5], true);
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let g = random_grown(&mut rng, n, &alphabet, Label::Infinity, odd_odd_free_admissible);
        for x in g.vertices().subsets() {
            let rho_x = ordinary_map(&g, x).unwrap();
            for y in g.vertices().subsets() {
                let oc = oc_sets(&g, x, y).unwrap();
                let images: VertexSet = oc.o_yx.iter().filter_map(|v| rho_x.image(v)).collect();
                assert_eq!(images, oc.o_xy);
                assert_eq!(images.len(), oc.o_yx.len());
                assert_eq!(rho_x.image_set(y), oc.c_xy);
            }
        }
    }
}

proptest! {
    #[test]
    fn standard_parabolics_intersect_in_the_intersection(
        g in graph(1..=6, labels(&[2, 4, 6], true)),
        xm in any::<u64>(),
        ym in any::<u64>(),
    ) {
        let (x, y) = (VertexSet::from_bits(xm & g.vertices().bits()), VertexSet::from_bits(ym & g.vertices().bits()));
        let id = Word::identity();
        let rw = intersect_rewrite(&g, &id, &id, x, y).unwrap();
        prop_assert_eq!(rw.left.base, x.intersection(y));
        prop_assert_eq!(rw.right.base, x.intersection(y));
        prop_assert!(rw.left.conjugator.is_empty() && rw.right.conjugator.is_empty());
    }

    #[test]
    fn identity_conjugator_is_the_ordinary_retraction(
        g in graph(1..=5, labels(&[2, 3, 4], true)),
        xm in any::<u64>(),
        w in word(5, 14),
    ) {
        prop_assume!(admits_ordinary_all(&g, DEFAULT_SUBSET_CAP).unwrap());
        let x = VertexSet::from_bits(xm & g.vertices().bits());
        let w = w.project(g.vertices());
        let p = ParabolicDescriptor::standard(x);
        prop_assert_eq!(extended_retraction(&g, &p, &w).unwrap(), ordinary_map(&g, x).unwrap().apply(&w).unwrap());
    }

    #[test]
    fn extended_retractions_are_idempotent(
        m in 2u32..=7,
        base in 0u64..4,
        f in word(2, 6),
        w in word(2, 8),
    ) {
        let g = LabeledGraph::from_fn(2, |_, _| Label::Finite(m));
        let p = ParabolicDescriptor::new(&g, f, VertexSet::from_bits(base)).unwrap();
        let once = extended_retraction(&g, &p, &w).unwrap();
        let twice = extended_retraction(&g, &p, &once).unwrap();
        let nf = |w: &Word| DihedralNF::from_word(m, 0, 1, w).unwrap();
        prop_assert_eq!(nf(&once), nf(&twice));
    }
}

#[test]
fn depth_one_ribbons_conjugate_generators() {
    for m in 3..=8 {
        let g = LabeledGraph::from_fn(2, |_, _| Label::Finite(m));
        for x in 0..2 {
            let start = VertexSet::singleton(x);
            let chains = conj_generators(&g, start, 1);
            assert_eq!(chains.len(), 3);
            for c in chains {
                let t = c.target.first().unwrap();
                let conj = c.word.concat(&Word::generator(x)).concat(&c.word.inverse());
                assert!(words_equal(&g, g.vertices(), &conj, &Word::generator(t)).unwrap().is_equal());
            }
        }
    }
}
