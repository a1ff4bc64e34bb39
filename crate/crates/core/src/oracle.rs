//! Slow reference implementations, used to cross-check the transducer algorithms.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::{ast, circ, circ_slice, content, Content, Letter, Word};

/// Default cap on the number of candidate words [`brute_min_word`] may examine.
pub const MIN_WORD_BUDGET: u64 = 5_000_000;

type Span = (usize, usize);

struct GreenRees<'a> {
    u: &'a [Letter],
    v: &'a [Letter],
    memo: HashMap<(Span, Span), bool>,
}

impl GreenRees<'_> {
    /// Spans are half-open ranges into `u` and `v`.
    fn eq(&mut self, a: Span, b: Span) -> bool {
        if let Some(&r) = self.memo.get(&(a, b)) {
            return r;
        }
        let (su, sv) = (&self.u[a.0..a.1], &self.v[b.0..b.1]);
        let r = if content(su) != content(sv) {
            false
        } else if su.is_empty() {
            true
        } else {
            let pu = circ_slice(su, &[0]).unwrap().len();
            let pv = circ_slice(sv, &[0]).unwrap().len();
            let qu = circ_slice(su, &[1]).unwrap().len();
            let qv = circ_slice(sv, &[1]).unwrap().len();
            su[pu] == sv[pv]
                && su[su.len() - qu - 1] == sv[sv.len() - qv - 1]
                && self.eq((a.0, a.0 + pu), (b.0, b.0 + pv))
                && self.eq((a.1 - qu, a.1), (b.1 - qv, b.1))
        };
        self.memo.insert((a, b), r);
        r
    }
}

/// Equality in the free band by the direct recursion on contents, `∘` and `∗`.
pub fn green_rees_equal(u: &Word, v: &Word) -> bool {
    let mut g = GreenRees {
        u,
        v,
        memo: HashMap::new(),
    };
    g.eq((0, u.len()), (0, v.len()))
}

/// [`brute_min_word_with_budget`] with [`MIN_WORD_BUDGET`].
pub fn brute_min_word(w: &Word) -> Result<Word> {
    brute_min_word_with_budget(w, MIN_WORD_BUDGET)
}

/// The short-lex least word equal to `w`, by trying every word over `cont(w)`
/// in short-lex order. Fails once more than `budget` candidates have been tried.
pub fn brute_min_word_with_budget(w: &Word, budget: u64) -> Result<Word> {
    let letters: Vec<Letter> = content(w).into_iter().collect();
    let k = letters.len();
    if k == 0 {
        return Ok(Word::new());
    }
    let want = content(w);
    let mut examined = 0u64;
    for len in k..=w.len() {
        let mut digits = vec![0usize; len];
        loop {
            examined += 1;
            if examined > budget {
                return Err(Error::BudgetExceeded(format!(
                    "more than {budget} candidates examined for a word of length {}",
                    w.len()
                )));
            }
            let cand: Word = digits.iter().map(|&d| letters[d]).collect();
            if content(&cand) == want && green_rees_equal(&cand, w) {
                return Ok(cand);
            }
            // odometer increment, last position fastest
            let mut p = len;
            loop {
                if p == 0 {
                    break;
                }
                p -= 1;
                digits[p] += 1;
                if digits[p] < k {
                    break;
                }
                digits[p] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    unreachable!("w itself is a candidate")
}

/// The least `k ≥ 1` such that, for `x' = x∘1^i` and `y' = y∘0^j`, the letter
/// `y'∗0^k` (side 0) is defined and absent from `cont(x')`, or `x'∗1^k` (side 1)
/// is defined and absent from `cont(y')`.
pub fn brute_k(x: &Word, y: &Word, side: u8, i: usize, j: usize) -> Option<usize> {
    let xs = circ(x, &vec![1; i])?;
    let ys = circ(y, &vec![0; j])?;
    let (scan, other, bit): (&Word, Content, u8) = if side == 0 {
        (&ys, content(&xs), 0)
    } else {
        (&xs, content(&ys), 1)
    };
    (1..)
        .map_while(|k| ast(scan, &vec![bit; k]).map(|a| (k, a)))
        .find(|(_, a)| !other.contains(a))
        .map(|(k, _)| k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn green_rees_examples() {
        assert!(green_rees_equal(&w("abab"), &w("ab")));
        assert!(!green_rees_equal(&w("aba"), &w("ab")));
        assert!(green_rees_equal(&w("aa"), &w("a")));
        assert!(green_rees_equal(&w(""), &w("")));
        assert!(!green_rees_equal(&w("ab"), &w("ba")));
        assert!(green_rees_equal(&w("abcbcabc"), &w("abc")));
    }

    #[test]
    fn brute_min_word_examples() {
        assert_eq!(brute_min_word(&w("abab")).unwrap(), w("ab"));
        assert_eq!(brute_min_word(&w("aba")).unwrap(), w("aba"));
        assert_eq!(brute_min_word(&w("")).unwrap(), w(""));
        assert_eq!(brute_min_word(&w("bab")).unwrap(), w("bab"));
        assert_eq!(brute_min_word(&w("bbaa")).unwrap(), w("ba"));
        assert!(matches!(
            brute_min_word_with_budget(&w("abcdcba"), 1000),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn brute_k_examples() {
        let (x, y) = (w("eaec"), w("bcacbcd"));
        assert_eq!(brute_k(&x, &y, 0, 0, 1), Some(3));
        assert_eq!(brute_k(&x, &y, 1, 0, 0), Some(2));
        for i in 0..=3 {
            assert_eq!(brute_k(&x, &y, 0, i, 4), None);
        }
        assert_eq!(brute_k(&x, &y, 0, 4, 0), None);
    }
}
