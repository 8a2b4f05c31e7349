//! Named witness families: `V_n`, `W_n`, `U_n`, `L_n` and `A[i,j]`.

use crate::automata::{Dfa, Lang};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter(
            "family index n must be >= 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// `c(n) = ⌈n/3⌉`
pub fn c(n: usize) -> usize {
    n.div_ceil(3)
}

/// `V_n = a_1 a_2 ... a_n`
pub fn v(n: usize) -> Result<Word> {
    check_n(n)?;
    Ok(distinct(n))
}

fn distinct(n: usize) -> Word {
    Word::from_letters((0..n as u16).map(Letter))
}

/// `W_n = V_n^3`
pub fn w(n: usize) -> Result<Word> {
    Ok(v(n)?.pow(3))
}

/// `U_n = V_{c(n)} V_{c(n)} V_{n-2c(n)}`. For `n = 1`, where the last
/// exponent would be negative, this is the length-1 prefix `a`.
pub fn u(n: usize) -> Result<Word> {
    check_n(n)?;
    let c = c(n);
    Ok(distinct(c).pow(3).prefix(n))
}

/// `v[i,j]`: the factor `a_i ... a_j` of `V_n`, 1-based, `i ≤ j ≤ n`.
pub fn v_factor(n: usize, i: usize, j: usize) -> Result<Word> {
    check_n(n)?;
    if i == 0 || i > j || j > n {
        return Err(Error::InvalidParameter(format!(
            "v[{i},{j}] needs 1 <= i <= j <= {n}"
        )));
    }
    Ok(Word::from_letters((i as u16 - 1..j as u16).map(Letter)))
}

/// `L_n = a^{n-1} a*` over `{a}`.
pub fn l_n(n: usize) -> Result<Lang> {
    check_n(n)?;
    let sigma = Alphabet::first(1)?;
    Ok(Lang::from_dfa(&Dfa::from_fn(
        sigma,
        n,
        0,
        |q| q == n - 1,
        |q, _| (q + 1).min(n - 1),
    )))
}

/// `A[i,j]` over `Σ_n`: words with at most `j` occurrences of `a_i`.
pub fn a_ij(n: usize, i: usize, j: usize) -> Result<Lang> {
    check_n(n)?;
    if i == 0 || i > n {
        return Err(Error::InvalidParameter(format!(
            "A[{i},{j}] needs 1 <= i <= {n}"
        )));
    }
    let sigma = Alphabet::first(n)?;
    let target = i - 1;
    Ok(Lang::from_dfa(&Dfa::from_fn(
        sigma,
        j + 2,
        0,
        |q| q <= j,
        |q, a| if a == target { (q + 1).min(j + 1) } else { q },
    )))
}

/// `A_i = (Σ_n ∖ {a_i})*` over `Σ_n`.
pub fn a_i(n: usize, i: usize) -> Result<Lang> {
    a_ij(n, i, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::brute_matches;

    #[test]
    fn word_families() {
        assert_eq!(u(7).unwrap().to_string(), "abcabca");
        assert_eq!(u(11).unwrap().to_string(), "abcdabcdabc");
        assert_eq!(w(2).unwrap().to_string(), "ababab");
        assert_eq!(v(1).unwrap().to_string(), "a");
        assert_eq!(v(4).unwrap().to_string(), "abcd");
        assert_eq!(c(3), 1);
        assert_eq!(c(4), 2);
        assert_eq!(u(1).unwrap().to_string(), "a");
        assert_eq!(u(2).unwrap().to_string(), "aa");
        assert_eq!(u(6).unwrap().to_string(), "ababab");
        assert_eq!(v_factor(5, 2, 4).unwrap().to_string(), "bcd");
    }

    #[test]
    fn u_matches_definition_for_n_at_least_two() {
        for n in 2..=20 {
            let c = c(n);
            let expected = v(c).unwrap().pow(2).concat(&distinct(n - 2 * c));
            assert_eq!(u(n).unwrap(), expected, "n = {n}");
        }
    }

    #[test]
    fn invalid_indices() {
        assert!(v(0).is_err());
        assert!(u(0).is_err());
        assert!(l_n(0).is_err());
        assert!(a_ij(3, 0, 1).is_err());
        assert!(a_ij(3, 4, 1).is_err());
        assert!(v_factor(3, 2, 1).is_err());
        assert!(v_factor(3, 1, 4).is_err());
    }

    #[test]
    fn l_n_state_complexity() {
        for n in 1..=8 {
            let l = l_n(n).unwrap();
            assert_eq!(l.kappa(), n);
            assert!(brute_matches(&l, 10, |x| x.len() >= n - 1));
        }
    }

    #[test]
    fn a_ij_is_bounded_occurrence_shuffle() {
        for n in 1..=3 {
            for i in 1..=n {
                for j in 0..=3 {
                    let l = a_ij(n, i, j).unwrap();
                    assert_eq!(l.kappa(), j + 2);
                    let ai = Letter(i as u16 - 1);
                    assert!(brute_matches(&l, 5, |x| x.count(ai) <= j));
                    // A_i ⧢ ↓(a_i^j)
                    let sigma = l.alphabet().clone();
                    let down = Lang::down_word(&sigma, &Word::from_letters(vec![ai; j])).unwrap();
                    assert_eq!(a_i(n, i).unwrap().shuffle(&down).unwrap(), l);
                }
            }
        }
    }
}
