mod common;

use proptest::prelude::*;
use unilinear::cli::{check_raw, parse_frl, parse_raw, render_frl, render_raw, to_raw, RawAlgebra};
use unilinear::construct::{
    cyclic_index, make_cyclic_url, make_mg, make_rab, Orient, ZKind, ZeroMonoid,
};
use unilinear::finalg::FinRL;
use unilinear::varieties::{DownsetDesc, GroupSig};

fn factors() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..5, 0..3)
}

fn construction() -> impl Strategy<Value = FinRL> {
    prop_oneof![
        factors().prop_map(|f| make_mg(&f).unwrap()),
        (0usize..4, 1usize..4, any::<bool>())
            .prop_filter("r + s >= 2", |&(r, s, _)| r + s >= 2)
            .prop_map(|(r, s, up)| {
                make_cyclic_url(r, s, if up { Orient::Up } else { Orient::Down }).unwrap()
            }),
        (prop::collection::vec(2u64..4, 0..2), 0u8..4).prop_map(|(f, k)| {
            let a = if f.is_empty() {
                ZeroMonoid::trivial()
            } else {
                ZeroMonoid::abelian_with_zero(&f).unwrap()
            };
            make_rab(&a, ZKind::from_tag(k).unwrap()).unwrap()
        }),
    ]
}

fn raw_tables() -> impl Strategy<Value = RawAlgebra> {
    (1usize..5).prop_flat_map(|n| {
        (
            Just(n),
            0..n,
            prop::collection::vec(prop::collection::vec(any::<bool>(), n), n),
            prop::collection::vec(prop::collection::vec(0..n, n), n),
        )
            .prop_map(|(n, unit, mut le, mul)| {
                // keep reflexivity so some samples are genuine orders
                for (i, row) in le.iter_mut().enumerate() {
                    row[i] = true;
                }
                RawAlgebra {
                    size: n,
                    unit,
                    bot: None,
                    top: None,
                    names: Some((0..n).map(|i| i.to_string()).collect()),
                    le,
                    mul,
                    ldiv: None,
                    rdiv: None,
                }
            })
    })
}

fn sig() -> impl Strategy<Value = GroupSig> {
    (
        0u32..2,
        prop::collection::btree_map(1usize..4, prop::collection::vec(1u32..4, 0..3), 0..3),
    )
        .prop_map(|(r, t)| GroupSig::new(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn render_parse_round_trip(a in construction()) {
        let text = render_frl(&a);
        let back = parse_frl(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(render_frl(&back), text);
        prop_assert!(common::laws_hold(&a).is_ok());
    }

    #[test]
    fn random_tables_never_panic(raw in raw_tables()) {
        let report = check_raw(&raw);
        let text = render_raw(&raw);
        let parsed = parse_frl(&text);
        prop_assert_eq!(parsed.is_ok(), report.passed());
        if let Ok(a) = parsed {
            prop_assert!(common::laws_hold(&a).is_ok());
            prop_assert_eq!(to_raw(&a).mul, raw.mul);
        }
        let reparsed = parse_raw(&text).unwrap();
        prop_assert_eq!(reparsed.le, raw.le);
    }

    #[test]
    fn signature_lattice_laws(a in sig(), b in sig(), c in sig()) {
        let j = a.join(&b);
        let m = a.meet(&b);
        prop_assert!(a.leq(&j) && b.leq(&j));
        prop_assert!(m.leq(&a) && m.leq(&b));
        if a.leq(&c) && b.leq(&c) {
            prop_assert!(j.leq(&c));
        }
        if c.leq(&a) && c.leq(&b) {
            prop_assert!(c.leq(&m));
        }
        prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
        prop_assert_eq!(a.leq(&b), a.join(&b) == b);
        prop_assert_eq!(a.to_string().parse::<GroupSig>().unwrap(), a);
    }

    #[test]
    fn principal_downset_is_leq(a in sig(), b in sig()) {
        let d = DownsetDesc::principal(b.clone());
        prop_assert_eq!(d.contains(&a), a.leq(&b));
        let printed: DownsetDesc = d.to_string().parse().unwrap();
        prop_assert_eq!(printed.contains(&a), a.leq(&b));
    }

    #[test]
    fn cyclic_index_stays_in_range(n in 0usize..200, r in 0usize..6, s in 1usize..6) {
        let i = cyclic_index(n, r, s);
        prop_assert!(i < r + s);
        if n >= r {
            prop_assert_eq!(cyclic_index(n + s, r, s), i);
        } else {
            prop_assert_eq!(i, n);
        }
    }
}

#[test]
fn periodic_cyclic_monoid_is_mg() {
    for n in 2..6 {
        let c = make_cyclic_url(0, n, Orient::Up).unwrap();
        let g = make_mg(&[n as u64]).unwrap();
        assert!(common::iso(&c, &g).is_some(), "n={n}");
    }
}
