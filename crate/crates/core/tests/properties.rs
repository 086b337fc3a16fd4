use proptest::prelude::*;

use quasimap_sl2::gring::{qint, rat, BiDegree, BiLaurentPoly, RationalBifunction};
use quasimap_sl2::mpoly::{
    divided_difference, even_table, series_inverse, Generator, GeneratorTable, Monomial, Poly, RingMorphism, Table,
};
use quasimap_sl2::text::parse_terms;

fn laurent() -> impl Strategy<Value = BiLaurentPoly> {
    prop::collection::vec((-4i64..6, -2i64..3, -5i64..6), 0..5)
        .prop_map(|terms| BiLaurentPoly::from_terms(terms.into_iter().map(|(a, b, c)| (BiDegree::new(a, b), rat(c)))))
}

/// Nonzero constant term and no negative v-powers, so it expands in `v`.
fn unit_series_den() -> impl Strategy<Value = BiLaurentPoly> {
    prop::collection::vec((1i64..4, -1i64..2, -3i64..4), 0..3).prop_map(|terms| {
        let tail = BiLaurentPoly::from_terms(terms.into_iter().map(|(a, b, c)| (BiDegree::new(2 * a, b), rat(c))));
        &BiLaurentPoly::one() + &tail
    })
}

fn xyz() -> Table {
    even_table([("x", BiDegree::new(2, 0)), ("y", BiDegree::new(2, 0)), ("z", BiDegree::new(4, -2))]).unwrap()
}

fn poly_on(t: Table) -> impl Strategy<Value = Poly> {
    let n = t.len();
    prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 0..5)
        .prop_map(move |terms| Poly::from_terms(&t, terms.into_iter().map(|(e, c)| (Monomial(e), rat(c)))))
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn laurent_text_round_trip(a in laurent()) {
        let back: BiLaurentPoly = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn expansion_is_multiplicative(p in laurent(), q in unit_series_den(), r in laurent(), s in unit_series_den()) {
        // Numerators shifted into nonnegative v-degree keep the truncation fixed.
        let shift = BiDegree::new(4, 0);
        let (p, r) = (p.shift(shift), r.shift(shift));
        let x = RationalBifunction::new(p.clone(), q.clone()).unwrap();
        let y = RationalBifunction::new(r.clone(), s.clone()).unwrap();
        let xy = RationalBifunction::new(&p * &r, &q * &s).unwrap();
        let lhs = x.expand(14).unwrap().try_mul(&y.expand(14).unwrap()).unwrap();
        prop_assert!(lhs.try_eq(&xy.expand(14).unwrap()).unwrap());
    }

    #[test]
    fn qint_addition(m in -6i64..7, n in -6i64..7) {
        let lhs = qint(m + n);
        let rhs = &qint(m).shift(BiDegree::new(-n, 0)) + &qint(n).shift(BiDegree::new(m, 0));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_composes(imgs_f in prop::collection::vec(poly_on(xyz()), 3), imgs_g in prop::collection::vec(poly_on(xyz()), 3), p in poly_on(xyz())) {
        let t = xyz();
        let f = RingMorphism::new(&t, &t, imgs_f).unwrap();
        let g = RingMorphism::new(&t, &t, imgs_g).unwrap();
        let fg = f.then(&g).unwrap();
        prop_assert_eq!(fg.substitute(&p).unwrap(), g.substitute(&f.substitute(&p).unwrap()).unwrap());
    }

    #[test]
    fn substitution_is_multiplicative(imgs in prop::collection::vec(poly_on(xyz()), 3), p in poly_on(xyz()), q in poly_on(xyz())) {
        let t = xyz();
        let f = RingMorphism::new(&t, &t, imgs).unwrap();
        let lhs = f.substitute(&(&p * &q)).unwrap();
        prop_assert_eq!(lhs, &f.substitute(&p).unwrap() * &f.substitute(&q).unwrap());
    }

    #[test]
    fn divided_difference_calculus(p in poly_on(xyz()), q in poly_on(xyz()), c in -4i64..5) {
        let dd = |u: &Poly| divided_difference(u, 0, 1).unwrap();
        prop_assert!(dd(&dd(&p)).is_zero());
        let lin = &p.scale(&rat(c)) + &q;
        prop_assert_eq!(dd(&lin), &dd(&p).scale(&rat(c)) + &dd(&q));
        // Leibniz: ∂(pq) = ∂(p) q + s(p) ∂(q).
        let swapped = p.swap_generators(0, 1).unwrap();
        prop_assert_eq!(dd(&(&p * &q)), &(&dd(&p) * &q) + &(&swapped * &dd(&q)));
        // Symmetric polynomials are scalars for ∂.
        let sym = &p + &swapped;
        prop_assert_eq!(dd(&(&sym * &q)), &sym * &dd(&q));
    }

    #[test]
    fn series_inverse_inverts(tail in prop::collection::vec(poly_on(xyz()), 1..4)) {
        let t = xyz();
        let mut u = vec![Poly::one(&t)];
        u.extend(tail);
        let order = 5;
        let w = series_inverse(&u, order).unwrap();
        for k in 0..=order {
            let mut acc = Poly::zero(&t);
            for j in 0..=k.min(u.len() - 1) {
                acc = &acc + &(&u[j] * &w[k - j]);
            }
            let want = if k == 0 { Poly::one(&t) } else { Poly::zero(&t) };
            prop_assert_eq!(acc, want);
        }
    }

    #[test]
    fn poly_text_round_trip(p in poly_on(xyz())) {
        let t = xyz();
        prop_assert_eq!(Poly::parse(&t, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn laurent_parser_never_panics(s in "\\PC{0,40}") {
        let _ = s.parse::<BiLaurentPoly>();
    }

    #[test]
    fn laurent_parser_never_panics_on_near_misses(s in "[-+*^ 0-9vt/()]{0,30}") {
        if let Ok(p) = s.parse::<BiLaurentPoly>() {
            let back: BiLaurentPoly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }

    #[test]
    fn poly_parser_never_panics(s in "[-+*^ 0-9xyzw/()]{0,30}") {
        let t = xyz();
        if let Ok(p) = Poly::parse(&t, &s) {
            prop_assert_eq!(Poly::parse(&t, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn term_parser_never_panics(s in "\\PC{0,40}") {
        let _ = parse_terms(&s);
    }

    #[test]
    fn super_poly_parser_round_trips(s in "[-+*^ 0-9xw12/()]{0,30}") {
        let t = GeneratorTable::new(vec![
            Generator::even("x", BiDegree::new(2, 0)),
            Generator::odd("w1", BiDegree::new(-2, 2)),
            Generator::odd("w2", BiDegree::new(-4, 2)),
        ])
        .unwrap();
        if let Ok(p) = Poly::parse(&t, &s) {
            prop_assert_eq!(Poly::parse(&t, &p.to_string()).unwrap(), p.clone());
            let w1 = Poly::gen(&t, "w1").unwrap();
            prop_assert!((&(&p * &w1) * &w1).is_zero());
        }
    }
}

fn seeds(target: &str) -> Vec<String> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut out: Vec<String> =
        std::fs::read_dir(dir).unwrap().map(|e| std::fs::read_to_string(e.unwrap().path()).unwrap()).collect();
    out.sort();
    out
}

#[test]
fn fuzz_corpus_seeds_hold() {
    for s in seeds("parse_terms") {
        let _ = parse_terms(&s);
    }
    for s in seeds("parse_laurent") {
        let p: BiLaurentPoly = s.parse().unwrap();
        assert_eq!(p.to_string().parse::<BiLaurentPoly>().unwrap(), p);
    }
    let even =
        even_table([("x1", BiDegree::new(2, 0)), ("x2", BiDegree::new(2, 0)), ("c", BiDegree::new(4, -2))]).unwrap();
    let parsed: Vec<_> = seeds("parse_poly").iter().filter_map(|s| Poly::parse(&even, s).ok()).collect();
    assert_eq!(parsed.len(), 3, "every seed but the unknown-generator one parses");
    for p in parsed {
        assert_eq!(Poly::parse(&even, &p.to_string()).unwrap(), p);
    }
    let odd = GeneratorTable::new(vec![
        Generator::even("x", BiDegree::new(2, 0)),
        Generator::odd("w1", BiDegree::new(-2, 2)),
        Generator::odd("w2", BiDegree::new(-4, 2)),
    ])
    .unwrap();
    for s in seeds("parse_super_poly") {
        let p = Poly::parse(&odd, &s).unwrap();
        assert_eq!(Poly::parse(&odd, &p.to_string()).unwrap(), p);
    }
    assert!(Poly::parse(&odd, "w2*w1 + w1*w2").unwrap().is_zero());
    assert!(Poly::parse(&odd, "w1^2").unwrap().is_zero());
}
