use proptest::prelude::*;

use sebthom_core::atoms::pham;
use sebthom_core::expr::{eval, parse, parse_poly, split_disjoint};
use num_traits::Signed;
use sebthom_core::{AtomRegistry, Expr, Poly};

fn monomial() -> impl Strategy<Value = String> {
    (1i64..=9, 1i64..=4, prop::collection::vec((0usize..4, 1u32..=4), 1..=3)).prop_map(
        |(num, den, vars)| {
            let mut s = if den == 1 { format!("{num}") } else { format!("{num}/{den}") };
            for (v, e) in vars {
                s.push_str(&format!("*{}^{e}", ["x", "y", "z", "w1"][v]));
            }
            s
        },
    )
}

fn poly_source() -> impl Strategy<Value = String> {
    prop::collection::vec((any::<bool>(), monomial()), 1..=4).prop_map(|ms| {
        let mut s = String::new();
        for (i, (minus, m)) in ms.iter().enumerate() {
            match (i, minus) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(m);
        }
        s
    })
}

/// `p` written with its terms in increasing instead of decreasing order.
fn reversed(p: &Poly) -> String {
    let mut s = String::new();
    for (i, (m, c)) in p.sorted_terms().into_iter().rev().enumerate() {
        let negative = c.is_negative();
        s.push_str(match (i, negative) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        s.push_str(&c.abs().to_string());
        for (e, v) in m.iter().zip(p.variables()) {
            if *e > 0 {
                s.push_str(&format!("*{v}^{e}"));
            }
        }
    }
    s
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (2i64..=30).prop_map(Expr::Pow),
        (1i64..=5).prop_map(Expr::Quad),
        prop::collection::vec(2i64..=9, 1..=4).prop_map(Expr::Pham),
        "[a-z\"\\\\ -]{1,8}".prop_map(Expr::AtomRef),
        poly_source().prop_filter_map("nonzero", |s| {
            let p = parse_poly(&s).ok()?;
            (!p.is_zero()).then_some(Expr::PolyLiteral(p))
        }),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::join(a, b)),
            (inner, 1i64..=4).prop_map(|(e, m)| Expr::suspend(e, m)),
        ]
    })
}

proptest! {
    #[test]
    fn display_parses_back(e in expr()) {
        let shown = e.to_string();
        prop_assert_eq!(parse(&shown).unwrap(), e, "{}", shown);
    }

    #[test]
    fn polynomial_display_parses_back(src in poly_source()) {
        let p = parse_poly(&src).unwrap();
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn split_ignores_term_order(src in poly_source()) {
        let p = parse_poly(&src).unwrap();
        prop_assume!(!p.is_zero());
        let q = parse_poly(&reversed(&p)).unwrap();
        prop_assert_eq!(split_disjoint(&p).unwrap(), split_disjoint(&q).unwrap());
    }

    #[test]
    fn pure_power_sum_is_pham(exps in prop::collection::vec(2i64..=7, 1..=4), shift in 0usize..4) {
        // variable names chosen so that sorted order differs from term order
        let names = ["d", "c", "b", "a"];
        let terms: Vec<String> = exps
            .iter()
            .enumerate()
            .map(|(i, a)| format!("{}^{a}", names[(i + shift) % 4]))
            .collect();
        let reg = AtomRegistry::new();
        let e = parse(&terms.join(" + ")).unwrap();
        prop_assert_eq!(eval(&e, &reg).unwrap(), pham(&exps).unwrap());
        let mut sorted = e.brieskorn_exponents().unwrap();
        let mut expected = exps.clone();
        sorted.sort();
        expected.sort();
        prop_assert_eq!(sorted, expected);
    }

    #[test]
    fn split_follows_variable_renaming(src in poly_source()) {
        // x y z w1 -> r q p a reverses the sorted order
        let renamed = src.replace("w1", "a").replace('x', "r").replace('y', "q").replace('z', "p");
        let (p, q) = (parse_poly(&src).unwrap(), parse_poly(&renamed).unwrap());
        prop_assume!(!p.is_zero());
        let sizes = |poly: &Poly| {
            let mut v: Vec<(usize, usize)> = split_disjoint(poly)
                .unwrap()
                .summands
                .iter()
                .map(|s| (s.variables().len(), s.num_terms()))
                .collect();
            v.sort();
            v
        };
        prop_assert_eq!(sizes(&p), sizes(&q));
    }

    #[test]
    fn split_summands_use_disjoint_variables(src in poly_source()) {
        let p = parse_poly(&src).unwrap();
        prop_assume!(!p.is_zero());
        let parts = split_disjoint(&p).unwrap().summands;
        let mut seen: Vec<&String> = parts.iter().flat_map(|s| s.variables()).collect();
        let n = seen.len();
        seen.sort();
        seen.dedup();
        prop_assert_eq!(seen.len(), n);
    }
}

#[test]
fn malformed_inputs_report_offsets() {
    for (src, offset) in [("pham(2,)", 7), ("join(pow(2) pow(3))", 12), ("pow(", 4), ("x^", 2)] {
        let e = parse(src).unwrap_err();
        assert_eq!(e.offset, offset, "{src}: {e}");
    }
    assert!(parse("pow(1)").is_err());
    assert!(parse("suspend(pow(2), 0)").is_err());
}
