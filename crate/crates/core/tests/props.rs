use modtop_core::formula::{parse, print, Printer};
use modtop_core::kripke::{frames_of_size, FrameConstraints};
use modtop_core::{Formula, PointSet, TopSpace};
use proptest::prelude::*;

fn arb_formula(depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::Top),
        Just(Formula::Bot),
        "[a-z][a-z0-9_]{0,3}".prop_map(Formula::var),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            inner.clone().prop_map(Formula::dia),
            inner.clone().prop_map(Formula::boxed),
            inner.clone().prop_map(Formula::dia_star),
            inner.clone().prop_map(Formula::box_star),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn parse_inverts_print(f in arb_formula(6)) {
        prop_assert_eq!(parse(&print(&f)).unwrap(), f.clone());
        let sugared = Printer { resugar: true }.print(&f);
        prop_assert_eq!(parse(&sugared).unwrap(), f);
    }

    #[test]
    fn printing_is_stable(f in arb_formula(6)) {
        let once = print(&f);
        prop_assert_eq!(print(&parse(&once).unwrap()), once);
    }

    #[test]
    fn set_algebra(a in any::<u64>(), b in any::<u64>(), n in 1usize..=64) {
        let (a, b) = (PointSet::from_bits(a) & PointSet::full(n), PointSet::from_bits(b) & PointSet::full(n));
        prop_assert_eq!((a | b).len() + (a & b).len(), a.len() + b.len());
        prop_assert_eq!(a - b, a & b.complement(n));
        prop_assert_eq!(a.complement(n).complement(n), a);
        prop_assert!((a & b).is_subset(a));
        prop_assert_eq!(a.iter().collect::<PointSet>(), a);
        prop_assert_eq!(a.intersects(b), !(a & b).is_empty());
    }

    #[test]
    fn validity_is_invariant_under_relabelling(
        index in 0usize..171,
        perm_index in 0usize..6,
        f in arb_formula(4),
    ) {
        let frames = frames_of_size(3, &FrameConstraints::transitive());
        let frame = &frames[index];
        let perm = &modtop_core::kripke::permutations(3)[perm_index];
        let g = frame.relabel(perm);
        if f.vars().len() <= 4 {
            prop_assert_eq!(frame.validates(&f).unwrap(), g.validates(&f).unwrap());
            let sp = TopSpace::alexandrov(frame);
            let sq = TopSpace::alexandrov(&g);
            prop_assert_eq!(sp.d_valid(&f).unwrap(), sq.d_valid(&f).unwrap());
            prop_assert_eq!(sp.relabel(perm), sq);
        }
    }
}

#[test]
fn parse_rejects_garbage() {
    for text in ["", "p &", "(p", "p q", "<", "[*p", "P", "p -> -> q", "~"] {
        assert!(parse(text).is_err(), "{text:?}");
    }
}
