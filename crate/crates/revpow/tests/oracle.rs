//! Cross-checks against independent re-implementations: a string-based
//! digit reversal that leans on `u128::from_str_radix`, and a literal
//! try-every-root classifier. Neither shares code with the library beyond
//! the standard library, so agreement here is meaningful.

use revpow::{classify, enumerate, EquationId, Radix, SearchRange, Sign};

/// Little-endian rendering of `value`: already the reversed digit string.
fn reversed_digit_string(value: u128, radix: u32) -> String {
    let mut glyphs = Vec::new();
    let mut v = value;
    loop {
        glyphs.push(char::from_digit((v % u128::from(radix)) as u32, radix).unwrap());
        v /= u128::from(radix);
        if v == 0 {
            break;
        }
    }
    glyphs.into_iter().collect()
}

/// Digit reversal via string rendering and standard-library parsing.
fn oracle_reverse(value: u128, radix: u32) -> u128 {
    u128::from_str_radix(&reversed_digit_string(value, radix), radix).unwrap()
}

/// Finds `root ≥ 1` with `root^q = magnitude` by walking every candidate.
fn root_walk(magnitude: u128, q: u32) -> Option<u128> {
    let mut root = 1u128;
    loop {
        let power = root.pow(q);
        if power == magnitude {
            return Some(root);
        }
        if power > magnitude {
            return None;
        }
        root += 1;
    }
}

/// `(sign, root)` of a solution at `n`, by the most literal route possible.
fn oracle_classify(n: u128, radix: u32, p: u32, q: u32) -> Option<(i8, u128)> {
    let reversed = oracle_reverse(n, radix);
    let power = n.pow(p);
    let product = n * reversed;
    let (sign, magnitude) = if power >= product {
        (1i8, power - product)
    } else {
        (-1i8, product - power)
    };
    root_walk(magnitude, q).map(|root| (sign, root))
}

fn assert_agreement(eq: EquationId, radix: u32, hi: u128) {
    let r = Radix::new(radix).unwrap();
    for n in 1..hi {
        let expected = oracle_classify(n, radix, eq.lhs_exp(), eq.rhs_exp());
        let actual = classify(n as i128, r, eq).unwrap();
        match (expected, actual) {
            (None, None) => {}
            (Some((sign, root)), Some(solution)) => {
                let actual_sign = if solution.sign == Sign::Plus { 1i8 } else { -1 };
                assert_eq!(
                    (sign, root),
                    (actual_sign, solution.root as u128),
                    "solution details differ at N = {n} ({eq:?}, base {radix})"
                );
                solution.verify().unwrap();
            }
            (expected, actual) => {
                panic!("disagreement at N = {n} ({eq:?}, base {radix}): oracle {expected:?}, classify {actual:?}");
            }
        }
    }
}

#[test]
fn string_reversal_agrees_with_arithmetic_reversal() {
    for radix in [2u32, 3, 10, 16, 36] {
        let r = Radix::new(radix).unwrap();
        for v in 0..100_000u128 {
            assert_eq!(
                revpow::reverse(v as i128, r).unwrap() as u128,
                oracle_reverse(v, radix),
                "reversal mismatch at {v} in base {radix}"
            );
        }
    }
}

#[test]
fn classify_matches_root_walk_e1() {
    assert_agreement(EquationId::E1, 10, 20_000);
    assert_agreement(EquationId::E1, 3, 3_000);
}

#[test]
fn classify_matches_root_walk_e2() {
    assert_agreement(EquationId::E2, 10, 50_000);
    assert_agreement(EquationId::E2, 4, 5_000);
}

#[test]
fn classify_matches_root_walk_e3() {
    assert_agreement(EquationId::E3, 10, 2_500);
    assert_agreement(EquationId::E3, 2, 1_000);
}

#[test]
fn e1_base10_solutions_below_530000() {
    let range = SearchRange::new(EquationId::E1, Radix::DECIMAL, 1, 530_000).unwrap();
    let found = enumerate(&range, 2).unwrap();
    assert_eq!(found.len(), 37);
    for s in &found {
        s.verify().unwrap();
    }
    let first = &found[0];
    assert_eq!(
        (first.n_value, first.reversed, first.sign, first.root),
        (528, 825, Sign::Minus, 396)
    );
    let last = &found[36];
    assert_eq!(
        (last.n_value, last.reversed, last.sign, last.root),
        (528_528, 825_825, Sign::Minus, 396_396)
    );
}

#[test]
fn e2_base10_solutions_below_one_million() {
    let range = SearchRange::new(EquationId::E2, Radix::DECIMAL, 1, 1_000_000).unwrap();
    let found = enumerate(&range, 2).unwrap();
    let values: Vec<i128> = found.iter().map(|s| s.n_value).collect();
    assert_eq!(
        values,
        vec![48, 2_744, 4_125, 5_632, 7_128, 48_000, 49_152, 148_137, 273_273, 321_651, 456_876, 483_153, 999_000]
    );
    // trailing-zero candidates are handled: rev(48000) = 84
    let trailing = &found[5];
    assert_eq!((trailing.n_value, trailing.reversed), (48_000, 84));
    assert_eq!((trailing.sign, trailing.root), (Sign::Plus, 1_320));
}

#[test]
fn e3_base10_solutions_below_one_million() {
    let range = SearchRange::new(EquationId::E3, Radix::DECIMAL, 1, 1_000_000).unwrap();
    let found = enumerate(&range, 2).unwrap();
    let summary: Vec<(i128, i128)> = found.iter().map(|s| (s.n_value, s.root)).collect();
    assert_eq!(summary, vec![(101, 1_010), (626, 15_650), (10_001, 1_000_100)]);
}

#[test]
fn e3_base3_solutions_below_100000() {
    let range = SearchRange::new(EquationId::E3, Radix::new(3).unwrap(), 1, 100_000).unwrap();
    let found = enumerate(&range, 1).unwrap();
    let values: Vec<i128> = found.iter().map(|s| s.n_value).collect();
    assert_eq!(
        values,
        vec![10, 26, 82, 128, 730, 1_850, 6_562, 7_570, 19_601, 59_050, 69_697]
    );
    // 128 = 11202_3 is the non-palindromic exception
    assert_eq!(found[3].reversed, 184);
    assert_eq!(found[3].root, 1_440);
}

#[test]
fn e3_base4_solutions_below_100000() {
    let range = SearchRange::new(EquationId::E3, Radix::new(4).unwrap(), 1, 100_000).unwrap();
    let found = enumerate(&range, 1).unwrap();
    let values: Vec<i128> = found.iter().map(|s| s.n_value).collect();
    assert_eq!(
        values,
        vec![5, 10, 17, 65, 170, 257, 325, 530, 1_025, 1_445, 2_210, 2_810, 4_097, 16_385, 17_425, 65_537, 71_825, 84_101]
    );
}
