use proptest::prelude::*;

use whitehead_census::census::{rows_from_csv, rows_from_json, rows_to_csv, rows_to_json, CensusRow};
use whitehead_census::chern::{chain_reduction_coeffs, h1};
use whitehead_census::contfrac::{expand_negative, nf_eval, nf_expand, phi, psi};
use whitehead_census::counts::dg_surgery_count;
use whitehead_census::farey::{
    bypass_slope, clockwise_between_slopes, enumerate_s, farey_edge, in_s, mediant, thicken_positive,
    ThickeningResult,
};
use whitehead_census::monodromy::{act_on_point, fixed_slopes, phi_matrix};
use whitehead_census::surgery::{convert_contact_surgery, enumerate_stab_choices, Knot, SurgeryInstruction};
use whitehead_census::twist::{reduce_twist_word, Curve, Letter, TwistWord};
use whitehead_census::Slope;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

prop_compose! {
    fn finite_slope(max_den: i64, max_abs: i64)(q in 1..=max_den, p in -max_abs..=max_abs) -> Slope {
        Slope::new(p, q).unwrap()
    }
}

fn any_slope() -> impl Strategy<Value = Slope> {
    prop_oneof![1 => Just(Slope::INFINITY), 20 => finite_slope(100, 300)]
}

/// A Farey neighbour of `p/q`: `(x + k p)/(y + k q)` with `p y - q x = 1`.
fn neighbour(s: Slope, k: i64) -> Slope {
    let (p, q) = (s.num(), s.den());
    let (mut x, mut y) = (0i64, 0i64);
    'outer: for yy in -200..=200 {
        for xx in -400..=400 {
            if p * yy - q * xx == 1 {
                x = xx;
                y = yy;
                break 'outer;
            }
        }
    }
    Slope::new(x + k * p, y + k * q).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn mediant_is_adjacent_to_both(a in finite_slope(100, 100), k in -5i64..5) {
        let b = neighbour(a, k);
        prop_assume!(farey_edge(a, b));
        let m = mediant(a, b).unwrap();
        prop_assert!(farey_edge(m, a) && farey_edge(m, b));
    }

    #[test]
    fn circular_order_is_strict(a in any_slope(), x in any_slope(), b in any_slope()) {
        prop_assume!(a != b);
        let cw = clockwise_between_slopes(a, x, b).unwrap();
        let ccw = clockwise_between_slopes(b, x, a).unwrap();
        let endpoint = x == a || x == b;
        prop_assert_eq!([cw, ccw, endpoint].iter().filter(|&&t| t).count(), 1);
    }

    #[test]
    fn bypass_lands_on_neighbour_in_arc(s in any_slope(), r in any_slope(), flips in 0u32..4) {
        prop_assume!(s != r);
        let out = bypass_slope(s, r, flips).unwrap();
        prop_assert!(farey_edge(out, s));
        let inside = if flips % 2 == 1 {
            clockwise_between_slopes(s, out, r).unwrap()
        } else {
            clockwise_between_slopes(r, out, s).unwrap()
        };
        prop_assert!(out == r || inside);
        if farey_edge(s, r) {
            prop_assert_eq!(out, r);
        }
    }

    #[test]
    fn positive_thickening_is_monotone(s in finite_slope(40, 400)) {
        prop_assume!(s > Slope::from_int(2));
        let path = match thicken_positive(s).unwrap() {
            ThickeningResult::ReachedInfinity { path } => path,
            ThickeningResult::Stalled { at } => {
                prop_assert!(at.num() - 4 * at.den() == 1);
                return Ok(());
            }
            other => return Err(TestCaseError::fail(format!("{other:?}"))),
        };
        prop_assert!(path.windows(2).all(|w| w[0] < w[1] && farey_edge(w[0], w[1])));
    }

    #[test]
    fn s_enumeration_matches_brute_force(r in finite_slope(12, 60), bound in 1u64..25) {
        let got = enumerate_s(r, bound).unwrap();
        let (p, q) = (r.num(), r.den());
        let mut want = Vec::new();
        for q2 in 1..=bound as i64 {
            for sign in [-1, 1] {
                let top = p * q2 + sign;
                if top % q == 0 {
                    let cand = Slope::new(top / q, q2).unwrap();
                    if cand.den() == q2 && cand > r && !want.contains(&cand) {
                        want.push(cand);
                    }
                }
            }
        }
        want.sort();
        prop_assert_eq!(&got, &want);
        prop_assert!(got.iter().all(|&s| in_s(r, s).unwrap()));
    }

    #[test]
    fn expansion_round_trip(q in 1i64..500, p in -500i64..-1) {
        prop_assume!(p <= -q && gcd(p, q) == 1);
        let x = Slope::new(p, q).unwrap();
        let cf = nf_expand(x).unwrap();
        prop_assert_eq!(nf_eval(cf.terms()).unwrap(), x);
    }

    #[test]
    fn negative_expansion_round_trip(q in 2i64..500, p in -499i64..0) {
        prop_assume!(-p < q && gcd(p, q) == 1);
        let x = Slope::new(p, q).unwrap();
        let cf = expand_negative(x).unwrap();
        prop_assert_eq!(cf.terms()[0], -1);
        prop_assert_eq!(nf_eval(cf.terms()).unwrap(), x);
    }

    #[test]
    fn phi_is_periodic(r in finite_slope(200, 400)) {
        prop_assert_eq!(phi(r).unwrap(), phi(r.add_int(1).unwrap()).unwrap());
    }

    #[test]
    fn surgery_count_equals_enumeration(q in 1i64..=20, p in -20i64..=20) {
        prop_assume!(p != 0 && gcd(p, q) == 1);
        let link = convert_contact_surgery(&SurgeryInstruction::new(Knot::Trefoil, Slope::new(p, q).unwrap())).unwrap();
        prop_assert_eq!(dg_surgery_count(p, q).unwrap(), enumerate_stab_choices(&link).len() as u64);
    }

    #[test]
    fn chain_coefficients_follow_recurrence(tail in prop::collection::vec(-6i64..=-2, 0..8)) {
        let c = chain_reduction_coeffs(&tail);
        prop_assert_eq!(c.len(), tail.len() + 1);
        prop_assert_eq!(c[0], 1);
        let mut want = vec![1i64];
        for i in 1..=tail.len() {
            let next = match i {
                1 => 2,
                2 => (tail[0] + 1) * 2 - 1,
                _ => tail[i - 2] * want[i - 1] - want[i - 2],
            };
            want.push(next);
        }
        prop_assert_eq!(c, want);
    }

    #[test]
    fn homology_order_is_determinant(n in 1i64..30, r in finite_slope(50, 200)) {
        let g = h1(n, r).unwrap();
        let det = (n * r.num()).unsigned_abs();
        if det == 0 {
            prop_assert!(g.order().is_none());
        } else {
            prop_assert_eq!(g.order(), Some(det));
            prop_assert_eq!(g.invariant_factors().iter().product::<u64>(), det);
        }
    }

    #[test]
    fn twist_reduction_is_idempotent_and_associative(a in word(), b in word()) {
        let ra = reduce_twist_word(&a);
        prop_assert_eq!(reduce_twist_word(&ra), ra.clone());
        let rb = reduce_twist_word(&b);
        prop_assert_eq!(reduce_twist_word(&a.concat(&b)), reduce_twist_word(&ra.concat(&rb)));
        prop_assert!(ra.letters.iter().all(|l| l.exp != 0));
        prop_assert!(ra.letters.windows(2).all(|w| w[0].curve != w[1].curve));
    }

    #[test]
    fn census_rows_round_trip(n in 3i64..12, rs in prop::collection::vec(finite_slope(10, 40), 1..6)) {
        let rows: Vec<CensusRow> = rs.iter().map(|&r| CensusRow::compute(n, r).unwrap()).collect();
        prop_assert_eq!(rows_from_json(&rows_to_json(&rows)).unwrap(), rows.clone());
        prop_assert_eq!(rows_from_csv(&rows_to_csv(&rows)).unwrap(), rows);
    }
}

fn word() -> impl Strategy<Value = TwistWord> {
    let letter = (0usize..5, -3i64..=3).prop_map(|(c, e)| Letter::new(Curve::ALL[c], e));
    prop::collection::vec(letter, 0..12).prop_map(TwistWord::new)
}

#[test]
fn psi_on_integers() {
    for m in -50..0i64 {
        assert_eq!(psi(Slope::from_int(m)).unwrap(), (1 - m) as u64);
    }
    assert_eq!(psi(Slope::from_int(2)).unwrap(), 1);
    for m in 3..=50 {
        assert_eq!(psi(Slope::from_int(m)).unwrap(), 2);
    }
}

#[test]
fn chain_expansions_have_n_terms() {
    for n in 1..=100i64 {
        let cf = nf_expand(Slope::new(-(n + 1), n).unwrap()).unwrap();
        assert_eq!(cf.terms(), vec![-2; n as usize].as_slice());
    }
}

#[test]
fn fixed_slopes_are_fixed() {
    for n in 5..=50 {
        let phi = phi_matrix(n).unwrap();
        let (sa, sr) = fixed_slopes(n).unwrap();
        assert_eq!(act_on_point(&phi, &sa).unwrap(), sa);
        assert_eq!(act_on_point(&phi, &sr).unwrap(), sr);
    }
}
