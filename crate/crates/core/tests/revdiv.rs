use ballnum_core::revdiv::{
    check_closed_form_pattern, closed_form, magic_reverse_divisor, search_reverse_divisors,
    sum_decomposition, Family,
};
use ballnum_core::squares::{product_square_report, ProductKind};
use ballnum_core::BigUint;

#[test]
fn families_are_complete_up_to_seven_digits() {
    for n in 4..=7 {
        let found = search_reverse_divisors(n, false).unwrap();
        let expected = vec![
            closed_form(Family::Nine, n).unwrap(),
            closed_form(Family::Four, n).unwrap(),
        ];
        assert_eq!(found, expected, "n = {n}");
    }
}

#[test]
fn eight_and_nine_digits_have_concatenated_solutions() {
    // 1089·10001 and 2178·10001 (and their 9-digit analogues with a 0 spacer)
    let values = |n| -> Vec<(u64, u8, Family)> {
        search_reverse_divisors(n, false)
            .unwrap()
            .into_iter()
            .map(|r| (u64::try_from(r.value).unwrap(), r.quotient, r.family))
            .collect()
    };
    assert_eq!(
        values(8),
        [
            (10891089, 9, Family::Other),
            (10999989, 9, Family::Nine),
            (21782178, 4, Family::Other),
            (21999978, 4, Family::Four),
        ]
    );
    assert_eq!(
        values(9),
        [
            (108901089, 9, Family::Other),
            (109999989, 9, Family::Nine),
            (217802178, 4, Family::Other),
            (219999978, 4, Family::Four),
        ]
    );
}

#[test]
fn quotients_are_four_or_nine() {
    for n in 2..=9 {
        for r in search_reverse_divisors(n, false).unwrap() {
            assert!(r.quotient == 4 || r.quotient == 9, "{r:?}");
            assert_eq!(r.reverse_value, &r.value * r.quotient);
        }
    }
}

#[test]
fn closed_form_patterns_up_to_fifty() {
    for n in 4..=50 {
        for family in [Family::Nine, Family::Four] {
            let p = check_closed_form_pattern(family, n).unwrap();
            assert!(p.holds(), "{p:?}");
            assert_eq!(p.value.len(), n);
        }
    }
}

#[test]
fn magic_reverse_divisor_identities() {
    for n in 2..=20 {
        let m = magic_reverse_divisor(n).unwrap();
        assert!(m.passed(), "{m:?}");
        let s = sum_decomposition(n).unwrap();
        assert_eq!(s.d, m.value);
        assert!(s.sum_is_exact() && s.summands_are_ball_numbers(), "n = {n}");
    }
}

#[test]
fn reverse_divisor_products() {
    let all: Vec<BigUint> = (4..=9)
        .flat_map(|n| search_reverse_divisors(n, false).unwrap())
        .map(|r| r.value)
        .collect();
    for (i, a) in all.iter().enumerate() {
        let own = product_square_report(ProductKind::RevDivSelf(a.clone())).unwrap();
        assert!(own.holds(), "{a} times its reverse");
        for b in &all[i + 1..] {
            let r = product_square_report(ProductKind::RevDivPair(a.clone(), b.clone())).unwrap();
            assert!(r.holds(), "{a} × {b}");
        }
    }
}
