//! Signature words, good nodes and the Kashiwara operators `f_i` / `e_i`.
//!
//! For a residue `i`, the addable (`A`) and removable (`R`) `i`-nodes are
//! listed in increasing order for [`precedes`] and every adjacent `RA`
//! factor is cancelled until the word reads `A^p R^q`. The rightmost
//! surviving `A` is the good addable node and the leftmost surviving `R`
//! the good removable node.

use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::multipartition::{content, i_slots, Multicharge, Multipartition, Node};

/// `A` for an addable slot, `R` for a removable box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    A,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub node: Node,
    pub tag: Tag,
}

/// The unreduced word `w_i`: tagged `i`-nodes in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignatureWord {
    pub letters: Vec<Letter>,
}

/// What survives `RA` cancellation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReducedWord {
    /// The `A^p` block, left to right.
    pub addable: Vec<Node>,
    /// The `R^q` block, left to right.
    pub removable: Vec<Node>,
}

impl SignatureWord {
    pub fn tags(&self) -> String {
        self.letters
            .iter()
            .map(|l| match l.tag {
                Tag::A => 'A',
                Tag::R => 'R',
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tags())
    }
}

impl ReducedWord {
    pub fn p(&self) -> usize {
        self.addable.len()
    }

    pub fn q(&self) -> usize {
        self.removable.len()
    }
}

fn order_key(content: i64, comp: usize) -> (i64, Reverse<usize>) {
    (content, Reverse(comp))
}

/// `g1 ≺_s g2`: smaller content first, ties broken by the larger component.
///
/// Panics if either node's component is out of range for `charge`.
pub fn precedes(g1: Node, g2: Node, charge: &Multicharge) -> bool {
    let c1 = content(g1, charge).expect("node outside the charge");
    let c2 = content(g2, charge).expect("node outside the charge");
    order_key(c1, g1.comp).cmp(&order_key(c2, g2.comp)) == Ordering::Less
}

pub fn signature_word(mp: &Multipartition, charge: &Multicharge, i: i64) -> SignatureWord {
    let mut slots = i_slots(mp, charge, i);
    slots.sort_by_key(|s| order_key(s.content, s.node.comp));
    debug_assert!(
        slots
            .windows(2)
            .all(|w| order_key(w[0].content, w[0].node.comp)
                < order_key(w[1].content, w[1].node.comp))
    );
    SignatureWord {
        letters: slots
            .into_iter()
            .map(|s| Letter {
                node: s.node,
                tag: if s.addable { Tag::A } else { Tag::R },
            })
            .collect(),
    }
}

/// Cancels `RA` factors in one left-to-right pass: each `A` cancels the
/// most recent unmatched `R`.
pub fn reduce_word(word: &SignatureWord) -> ReducedWord {
    let mut out = ReducedWord::default();
    for letter in &word.letters {
        match letter.tag {
            Tag::R => out.removable.push(letter.node),
            Tag::A => {
                if out.removable.pop().is_none() {
                    out.addable.push(letter.node);
                }
            }
        }
    }
    out
}

pub fn good_addable(mp: &Multipartition, charge: &Multicharge, i: i64) -> Option<Node> {
    reduce_word(&signature_word(mp, charge, i))
        .addable
        .last()
        .copied()
}

pub fn good_removable(mp: &Multipartition, charge: &Multicharge, i: i64) -> Option<Node> {
    reduce_word(&signature_word(mp, charge, i))
        .removable
        .first()
        .copied()
}

/// `f_i`: add the good addable `i`-node, if any.
pub fn f_op(mp: &Multipartition, charge: &Multicharge, i: i64) -> Option<Multipartition> {
    good_addable(mp, charge, i).map(|node| mp.with_node_added(node))
}

/// `e_i`: remove the good removable `i`-node, if any.
pub fn e_op(mp: &Multipartition, charge: &Multicharge, i: i64) -> Option<Multipartition> {
    good_removable(mp, charge, i).map(|node| mp.with_node_removed(node))
}

/// Applies `e_i` at the smallest admissible residue until none applies.
///
/// Returns the terminal vertex and the residues `(i_1, …, i_n)` in removal
/// order, so that `f_{i_1} ⋯ f_{i_n}` (rightmost first) rebuilds `mp` from
/// the terminal vertex.
pub fn hw_reduce(mp: &Multipartition, charge: &Multicharge) -> (Multipartition, Vec<i64>) {
    let mut current = mp.clone();
    let mut path = Vec::with_capacity(mp.rank());
    'outer: loop {
        for i in 0..charge.level() {
            if let Some(smaller) = e_op(&current, charge, i) {
                current = smaller;
                path.push(i);
                continue 'outer;
            }
        }
        return (current, path);
    }
}

/// Membership in the connected component of the empty multipartition.
pub fn is_uglov(mp: &Multipartition, charge: &Multicharge) -> bool {
    hw_reduce(mp, charge).0.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipartition::{addable_nodes, removable_nodes};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn charge(s: &str, e: i64) -> Multicharge {
        Multicharge::parse(s, e).unwrap()
    }

    fn n(a: usize, b: usize, c: usize) -> Node {
        Node::new(a, b, c)
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(n(2, 1, 2), n(1, 3, 2), &charge("0,1", 3)));
        assert!(precedes(n(1, 1, 2), n(1, 1, 1), &charge("0,0", 3)));
        assert!(!precedes(n(1, 1, 1), n(1, 1, 2), &charge("0,0", 3)));
        assert!(precedes(n(3, 1, 2), n(2, 1, 1), &charge("0,1", 3)));
        assert!(!precedes(n(3, 1, 2), n(3, 1, 2), &charge("0,1", 3)));
    }

    #[test]
    fn worked_signature_words() {
        let s = charge("0,1", 3);
        let lam = mp("4|2.1");
        let w0 = signature_word(&lam, &s, 0);
        assert_eq!(w0.tags(), "RAR");
        assert_eq!(
            w0.letters.iter().map(|l| l.node).collect::<Vec<_>>(),
            [n(2, 1, 2), n(1, 3, 2), n(1, 4, 1)]
        );
        let w2 = signature_word(&lam, &s, 2);
        assert_eq!(w2.tags(), "AAR");
        assert_eq!(
            w2.letters.iter().map(|l| l.node).collect::<Vec<_>>(),
            [n(3, 1, 2), n(2, 1, 1), n(1, 2, 2)]
        );
        let empty = signature_word(&mp("-|-"), &s, 1);
        assert!(empty.letters.iter().all(|l| l.tag == Tag::A));
    }

    #[test]
    fn worked_reductions() {
        let s = charge("0,1", 3);
        let lam = mp("4|2.1");
        let r0 = reduce_word(&signature_word(&lam, &s, 0));
        assert_eq!((r0.p(), r0.q()), (0, 1));
        assert_eq!(r0.removable, [n(1, 4, 1)]);
        let r2 = reduce_word(&signature_word(&lam, &s, 2));
        assert_eq!((r2.p(), r2.q()), (2, 1));
        assert_eq!(r2.addable.last(), Some(&n(2, 1, 1)));
        assert_eq!(r2.removable.first(), Some(&n(1, 2, 2)));

        let ra = SignatureWord {
            letters: vec![
                Letter {
                    node: n(1, 1, 1),
                    tag: Tag::R,
                },
                Letter {
                    node: n(1, 1, 2),
                    tag: Tag::A,
                },
            ],
        };
        assert_eq!(reduce_word(&ra), ReducedWord::default());
    }

    #[test]
    fn good_nodes() {
        let s = charge("0,1", 3);
        let lam = mp("4|2.1");
        assert_eq!(good_addable(&lam, &s, 2), Some(n(2, 1, 1)));
        assert_eq!(good_addable(&lam, &s, 0), None);
        assert_eq!(good_removable(&lam, &s, 0), Some(n(1, 4, 1)));
        assert_eq!(good_removable(&lam, &s, 2), Some(n(1, 2, 2)));
        assert_eq!(good_removable(&mp("-|-"), &s, 0), None);
        assert_eq!(
            good_addable(&mp("-|-|-"), &charge("0,0,1", 2), 0),
            Some(n(1, 1, 1))
        );
    }

    #[test]
    fn operators() {
        let s = charge("0,0,1", 2);
        assert_eq!(f_op(&mp("1|-|-"), &s, 1), Some(mp("2|-|-")));
        assert_eq!(f_op(&mp("1|-|-"), &s, 0), Some(mp("1|1|-")));
        assert_eq!(e_op(&mp("1|1|-"), &s, 0), Some(mp("1|-|-")));
        for i in 0..2 {
            assert_eq!(e_op(&mp("-|-|-"), &s, i), None);
        }
        let none: Option<Multipartition> = None;
        assert_eq!(none.and_then(|m| f_op(&m, &s, 0)), None);
        assert_eq!(
            e_op(&mp("4.1|2.1"), &charge("0,1", 3), 2),
            Some(mp("4|2.1"))
        );
        assert_eq!(
            f_op(&mp("4|2.1"), &charge("0,1", 3), 2),
            Some(mp("4.1|2.1"))
        );
    }

    #[test]
    fn hw_reduce_examples() {
        let s = charge("0,0,1", 2);
        assert_eq!(hw_reduce(&mp("-|-|-"), &s), (mp("-|-|-"), vec![]));
        assert_eq!(hw_reduce(&mp("1|1|-"), &s), (mp("-|-|-"), vec![0, 0]));
        assert!(is_uglov(&mp("3|-|1"), &s));
        // f_0(2,∅,1) adds (1,3,1), the last A of its 0-word, so (2,∅,2) is
        // never reached.
        assert!(!is_uglov(&mp("2|-|2"), &s));
        assert!(!is_uglov(&mp("-|1|-"), &s));
        assert!(is_uglov(&mp("-|-|-"), &s));
    }

    #[test]
    fn operator_inverse_and_rank() {
        let s = charge("0,1", 3);
        for rank in 0..=5 {
            for lam in Multipartition::all(2, rank) {
                for i in 0..3 {
                    if let Some(mu) = f_op(&lam, &s, i) {
                        assert_eq!(mu.rank(), lam.rank() + 1);
                        assert_eq!(e_op(&mu, &s, i).as_ref(), Some(&lam));
                    }
                    if let Some(mu) = e_op(&lam, &s, i) {
                        assert_eq!(f_op(&mu, &s, i).as_ref(), Some(&lam));
                    }
                }
            }
        }
    }

    #[test]
    fn addable_and_removable_are_disjoint() {
        let s = charge("0,2,3", 4);
        for lam in Multipartition::all(3, 5) {
            for i in 0..4 {
                let add = addable_nodes(&lam, &s, i);
                let rem = removable_nodes(&lam, &s, i);
                assert!(add.iter().all(|a| !rem.contains(a) && !lam.contains(*a)));
                assert!(rem.iter().all(|r| lam.contains(*r)));
            }
        }
    }

    /// Deletes a randomly chosen adjacent `RA` pair until none is left.
    fn cancel_randomly(word: &[Letter], rng: &mut impl Rng) -> (Vec<Node>, Vec<Node>) {
        let mut w = word.to_vec();
        loop {
            let spots: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&k| w[k].tag == Tag::R && w[k + 1].tag == Tag::A)
                .collect();
            let Some(&k) = spots.choose(rng) else { break };
            w.drain(k..k + 2);
        }
        let split = w.iter().position(|l| l.tag == Tag::R).unwrap_or(w.len());
        assert!(
            w[split..].iter().all(|l| l.tag == Tag::R),
            "not of shape A^p R^q"
        );
        (
            w[..split].iter().map(|l| l.node).collect(),
            w[split..].iter().map(|l| l.node).collect(),
        )
    }

    #[test]
    fn cancellation_is_confluent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let len = rng.gen_range(0..=12);
            let letters: Vec<Letter> = (0..len)
                .map(|k| Letter {
                    node: n(k + 1, 1, 1),
                    tag: if rng.gen_bool(0.5) { Tag::A } else { Tag::R },
                })
                .collect();
            let word = SignatureWord { letters };
            let stack = reduce_word(&word);
            for _ in 0..3 {
                let (a, r) = cancel_randomly(&word.letters, &mut rng);
                assert_eq!(stack.addable, a, "{word}");
                assert_eq!(stack.removable, r, "{word}");
            }
        }
    }
}
