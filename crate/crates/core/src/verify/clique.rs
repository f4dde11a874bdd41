use super::distance::Symbols;
use crate::error::{Error, Result};
use crate::word::enumerate_space;

pub const CLIQUE_MAX_N: usize = 8;

#[derive(Clone)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn empty(len: usize) -> Self {
        BitSet(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn and(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
}

struct Search<'a> {
    adj: &'a [BitSet],
    best: usize,
}

impl Search<'_> {
    /// Greedy colouring of `p`: vertices in colour order with the number of
    /// colours used up to each, an upper bound on any clique among them.
    fn color(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut order = Vec::new();
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncolored.remove(v);
                q = BitSet(q.0.iter().zip(&self.adj[v].0).map(|(a, b)| a & !b).collect());
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, size: usize, mut p: BitSet) {
        for (v, bound) in self.color(&p).into_iter().rev() {
            if size + bound <= self.best {
                return;
            }
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(size + 1, next);
            }
            p.remove(v);
        }
    }
}

/// Largest set of words in `X^n` with all pairwise distances at most `d`,
/// by branch and bound with greedy colouring bounds. The automorphism group
/// is transitive on `X^n`, so the search fixes the first word.
pub fn max_anticode_size(n: usize, d: usize) -> Result<usize> {
    if n < 2 || n > CLIQUE_MAX_N {
        return Err(Error::TooLarge {
            what: format!("anticode search at length {n}"),
            size: n as u128,
            cap: CLIQUE_MAX_N as u128,
        });
    }
    if !(1..=4).contains(&d) {
        return Err(Error::Precondition(format!("diameter {d} outside 1..=4")));
    }
    let verts: Vec<Symbols> = enumerate_space(n).map(|w| Symbols::of(&w)).collect();
    let adj: Vec<BitSet> = verts
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut s = BitSet::empty(verts.len());
            for (j, b) in verts.iter().enumerate() {
                if i != j && a.distance(b) <= d {
                    s.insert(j);
                }
            }
            s
        })
        .collect();
    let mut search = Search { adj: &adj, best: 1 };
    search.expand(1, adj[0].clone());
    Ok(search.best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(max_anticode_size(2, 1).unwrap(), 2);
        assert_eq!(max_anticode_size(4, 2).unwrap(), 4);
        assert!(max_anticode_size(9, 2).is_err());
    }

    #[test]
    fn bitset_first_crosses_words() {
        let mut s = BitSet::empty(130);
        s.insert(129);
        assert_eq!(s.first(), Some(129));
        s.insert(64);
        assert_eq!(s.first(), Some(64));
        s.remove(64);
        s.remove(129);
        assert!(s.first().is_none() && s.is_empty());
    }
}
