use freeband::oracle::{brute_k, brute_min_word, green_rees_equal};
use freeband::words::{all_bits, circ_slice};
use freeband::*;
use proptest::collection::vec;
use proptest::prelude::*;

fn word(max_alphabet: u32, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_alphabet)
        .prop_flat_map(move |m| vec(0..m, 0..=max_len))
        .prop_map(Word::from_ids)
}

fn nonempty_word(max_alphabet: u32, max_len: usize) -> impl Strategy<Value = Word> {
    (1..=max_alphabet)
        .prop_flat_map(move |m| vec(0..m, 1..=max_len))
        .prop_map(Word::from_ids)
}

fn bitstring(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    vec(0..2u8, 0..=max_len)
}

fn minimal(w: &Word) -> Transducer {
    minimize(&interval_transducer(w)).unwrap()
}

fn sorted(w: &[Letter]) -> Vec<Letter> {
    let mut v = w.to_vec();
    v.sort();
    v
}

proptest! {
    #[test]
    fn f_eval_is_a_permutation_of_content(w in word(5, 20)) {
        let c: Vec<Letter> = content(&w).into_iter().collect();
        for a in all_bits(c.len()) {
            let out = f_eval(&w, &a).unwrap();
            prop_assert_eq!(sorted(&out), c.clone());
        }
    }

    #[test]
    fn circ_extends_by_prefix_and_suffix(w in word(5, 20), a in bitstring(6)) {
        if let Some(x) = circ(&w, &a) {
            let k = content(&w).len();
            prop_assert_eq!(content(&x).len(), k - a.len());
            let mut a0 = a.clone();
            a0.push(0);
            if let Some(p) = circ(&w, &a0) {
                prop_assert!(x.starts_with(&p));
                prop_assert!(!content(&p).contains(&ast(&w, &a0).unwrap()));
            }
            let mut a1 = a.clone();
            a1.push(1);
            if let Some(s) = circ(&w, &a1) {
                prop_assert!(x.ends_with(&s));
                prop_assert!(!content(&s).contains(&ast(&w, &a1).unwrap()));
            }
        } else {
            prop_assert!(a.len() > content(&w).len());
        }
    }

    #[test]
    fn green_rees_is_an_equivalence(u in word(3, 8), v in word(3, 8), x in word(3, 8)) {
        prop_assert!(green_rees_equal(&u, &u));
        prop_assert_eq!(green_rees_equal(&u, &v), green_rees_equal(&v, &u));
        if green_rees_equal(&u, &v) && green_rees_equal(&v, &x) {
            prop_assert!(green_rees_equal(&u, &x));
        }
    }

    #[test]
    fn green_rees_is_a_congruence(u in word(3, 6), x in word(3, 6), y in word(3, 6)) {
        // u² against u gives an equal pair to multiply by
        let uu = u.concat(&u);
        prop_assert!(green_rees_equal(&uu, &u));
        prop_assert!(green_rees_equal(&uu.concat(&x), &u.concat(&x)));
        prop_assert!(green_rees_equal(&x.concat(&uu), &x.concat(&u)));
        prop_assert_eq!(
            green_rees_equal(&x.concat(&y), &y.concat(&x)),
            equal_in_free_band(&x.concat(&y), &y.concat(&x))
        );
    }

    #[test]
    fn brute_min_word_is_idempotent(w in word(3, 6)) {
        let m = brute_min_word(&w).unwrap();
        prop_assert_eq!(content(&m), content(&w));
        prop_assert!(green_rees_equal(&m, &w));
        prop_assert_eq!(brute_min_word(&m).unwrap(), m);
    }

    #[test]
    fn subtransducers_realize_circ(w in word(4, 16), a in bitstring(4)) {
        let t = interval_transducer(&w);
        if let Some(q) = t.step(t.initial(), &a) {
            let sub = circ(&w, &a).unwrap();
            prop_assert!(t.view(q).realizes(&sub).unwrap());
            let m = minimal(&w);
            let mq = m.step(m.initial(), &a).unwrap();
            prop_assert!(m.view(mq).realizes(&sub).unwrap());
        }
    }

    #[test]
    fn levels_drop_by_one_per_step(w in word(5, 25), a in bitstring(5)) {
        for t in [interval_transducer(&w), minimal(&w)] {
            let q0 = t.initial();
            prop_assert_eq!(t.level(q0), Some(content(&w).len()));
            if let Some(q) = t.step(q0, &a) {
                prop_assert_eq!(t.level(q), Some(content(&w).len() - a.len()));
            }
        }
    }

    #[test]
    fn interval_transducer_matches_f(w in word(5, 50)) {
        let t = interval_transducer(&w);
        prop_assert_eq!(t.validate(), Ok(()));
        prop_assert!(t.num_states() <= 2 * content(&w).len() * w.len() + 1);
        if w.is_empty() {
            prop_assert!(t.is_terminal(t.initial()));
        }
        for a in all_bits(content(&w).len()).filter(|a| !a.is_empty()) {
            prop_assert_eq!(t.output(t.initial(), &a), f_eval(&w, &a));
        }
    }

    #[test]
    fn full_and_reachable_interval_transducers_agree(w in word(4, 30)) {
        let full = interval_transducer_full(&w);
        prop_assert_eq!(full.validate(), Ok(()));
        prop_assert!(full.num_states() <= 2 * content(&w).len() * w.len() + 1);
        prop_assert_eq!(minimize(&full).unwrap(), minimal(&w));
    }

    #[test]
    fn fbt_round_trips(w in word(5, 30)) {
        let t = minimal(&w);
        prop_assert_eq!(transducer::parse_fbt(&transducer::to_fbt(&t)).unwrap(), t);
    }

    #[test]
    fn minimize_preserves_function(w in word(4, 20)) {
        let m = minimal(&w);
        prop_assert!(m.realizes(&w).unwrap());
        prop_assert!(is_minimal(&m));
        prop_assert_eq!(minimize(&m).unwrap(), m.clone());
        prop_assert!(m.num_states() <= 2 * normalize(&w).len() * content(&w).len() + 1);
    }

    #[test]
    fn equality_is_a_congruence(u in word(4, 15), x in word(4, 15)) {
        let u2 = u.concat(&u);
        prop_assert!(equal_in_free_band(&u2, &u));
        prop_assert!(equal_in_free_band(&x.concat(&u2), &x.concat(&u)));
        prop_assert!(equal_in_free_band(&u2.concat(&x), &u.concat(&x)));
    }

    #[test]
    fn compute_k_matches_definition(x in word(6, 15), y in word(6, 15)) {
        let (tx, ty) = (minimal(&x), minimal(&y));
        for side in 0..2u8 {
            let k = compute_k(&tx, &ty, side).unwrap();
            for i in 0..k.rows() {
                for j in 0..k.cols() {
                    prop_assert_eq!(k.get(i, j), brute_k(&x, &y, side, i, j));
                }
            }
        }
    }

    #[test]
    fn product_prefix_and_suffix(u in nonempty_word(4, 10), v in nonempty_word(4, 10)) {
        let uv = u.concat(&v);
        let v0 = Word::from(circ_slice(&v, &[0]).unwrap());
        let v_ast0 = ast(&v, &[0]).unwrap();
        if !content(&u).contains(&v_ast0) {
            prop_assert!(green_rees_equal(&circ(&uv, &[0]).unwrap(), &u.concat(&v0)));
            prop_assert_eq!(ast(&uv, &[0]).unwrap(), v_ast0);
        } else {
            let uv0 = u.concat(&v0);
            prop_assert!(green_rees_equal(&circ(&uv, &[0]).unwrap(), &circ(&uv0, &[0]).unwrap()));
            prop_assert_eq!(ast(&uv, &[0]), ast(&uv0, &[0]));
        }
        let u1 = Word::from(circ_slice(&u, &[1]).unwrap());
        let u_ast1 = ast(&u, &[1]).unwrap();
        if !content(&v).contains(&u_ast1) {
            prop_assert!(green_rees_equal(&circ(&uv, &[1]).unwrap(), &u1.concat(&v)));
            prop_assert_eq!(ast(&uv, &[1]).unwrap(), u_ast1);
        } else {
            let u1v = u1.concat(&v);
            prop_assert!(green_rees_equal(&circ(&uv, &[1]).unwrap(), &circ(&u1v, &[1]).unwrap()));
            prop_assert_eq!(ast(&uv, &[1]), ast(&u1v, &[1]));
        }
    }

    #[test]
    fn product_states_come_from_operands_or_grid(x in nonempty_word(4, 12), y in nonempty_word(4, 12)) {
        let (tx, ty) = (minimal(&x), minimal(&y));
        let p = multiply(&tx, &ty).unwrap();
        let (nx, ny) = (tx.num_states(), ty.num_states());
        let cy = content(&y).len();
        let reachable = p.reachable();
        for q in p.state_ids().filter(|q| reachable[q.index()]) {
            let expected = if q.index() < nx {
                circ(&x, &path_to(&tx, StateId(q.0))).unwrap()
            } else if q.index() < nx + ny {
                circ(&y, &path_to(&ty, StateId(q.0 - nx as u32))).unwrap()
            } else {
                let g = q.index() - nx - ny;
                let (i, j) = (g / cy, g % cy);
                circ(&x, &vec![1; i]).unwrap().concat(&circ(&y, &vec![0; j]).unwrap())
            };
            prop_assert!(p.view(q).realizes(&expected).unwrap());
        }
    }

    #[test]
    fn multiplication_matches_concatenation(u in word(5, 25), v in word(5, 25)) {
        let p = multiply(&interval_transducer(&u), &interval_transducer(&v)).unwrap();
        prop_assert_eq!(p.validate(), Ok(()));
        prop_assert!(equal_transducers(&p, &interval_transducer(&u.concat(&v))).unwrap());
        prop_assert_eq!(min_word(&minimize(&p).unwrap()).unwrap(), normalize(&u.concat(&v)));
    }

    #[test]
    fn multiplication_is_associative(a in word(4, 12), b in word(4, 12), c in word(4, 12)) {
        let (ta, tb, tc) = (minimal(&a), minimal(&b), minimal(&c));
        let left = multiply(&multiply(&ta, &tb).unwrap(), &tc).unwrap();
        let right = multiply(&ta, &multiply(&tb, &tc).unwrap()).unwrap();
        prop_assert!(equal_transducers(&left, &right).unwrap());
    }

    #[test]
    fn identity_is_neutral(u in word(5, 20)) {
        let e = interval_transducer(&Word::new());
        let t = interval_transducer(&u);
        prop_assert!(equal_transducers(&multiply(&e, &t).unwrap(), &t).unwrap());
        prop_assert!(equal_transducers(&multiply(&t, &e).unwrap(), &t).unwrap());
    }

    #[test]
    fn least_word_commutes_with_circ(w in word(4, 14), a in bitstring(4)) {
        let m = normalize(&w);
        if let Some(x) = circ(&w, &a) {
            prop_assert_eq!(normalize(&x), circ(&m, &a).unwrap());
        }
    }

    #[test]
    fn least_word_is_the_overlap_of_its_halves(w in nonempty_word(4, 14)) {
        let s = normalize(&circ(&w, &[0]).unwrap()).concat(&Word::from_letters(vec![ast(&w, &[0]).unwrap()]));
        let t = Word::from_letters(vec![ast(&w, &[1]).unwrap()]).concat(&normalize(&circ(&w, &[1]).unwrap()));
        let overlaps: Vec<usize> = (1..=s.len().min(t.len()))
            .filter(|&n| s[s.len() - n..] == t[..n])
            .collect();
        prop_assert!(overlaps.len() <= 1);
        if ast(&w, &[0]) == ast(&w, &[1]) {
            prop_assert_eq!(overlaps.clone(), vec![1]);
        }
        let n = overlaps.first().copied().unwrap_or(0);
        let glued = Word::from(&s[..s.len() - n]).concat(&t);
        prop_assert_eq!(normalize(&w), glued);
    }

    #[test]
    fn normalize_laws(u in word(5, 40), v in word(5, 40)) {
        let m = normalize(&u);
        prop_assert!(equal_in_free_band(&m, &u));
        prop_assert!(m.len() <= u.len());
        prop_assert_eq!(normalize(&m), m.clone());
        prop_assert_eq!(normalize(&u.concat(&v)), normalize(&m.concat(&normalize(&v))));
    }
}

/// Some input path from the initial state of `t` to `q`.
fn path_to(t: &Transducer, q: StateId) -> Vec<u8> {
    fn go(t: &Transducer, cur: StateId, q: StateId, path: &mut Vec<u8>) -> bool {
        if cur == q {
            return true;
        }
        for b in 0..2 {
            if let Some(n) = t.next(cur, b) {
                path.push(b);
                if go(t, n, q, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let mut path = Vec::new();
    assert!(go(t, t.initial(), q, &mut path), "state is reachable");
    path
}
