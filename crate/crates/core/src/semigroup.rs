//! Numerical semigroups: cofinite submonoids of ℕ.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_integer::Integer;

use crate::{Error, Result};

/// A numerical semigroup given by its minimal generating set.
///
/// Membership is tabulated on `0..=W` with `W = F + 1 + 2·max(generators)`;
/// everything above the Frobenius number is a member anyway, so
/// [`contains`](Self::contains) answers for every integer.
#[derive(Clone, Debug)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    frobenius: i64,
    genus: usize,
    membership: Vec<bool>,
    pseudo_frobenius: Vec<i64>,
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing to the minimal
    /// generating set.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotCoprime(gcd));
        }
        let mut sorted: Vec<i64> = gens.iter().map(|&g| g as i64).collect();
        sorted.sort_unstable();
        sorted.dedup();

        let multiplicity = sorted[0];
        let apery = apery_by_shortest_paths(multiplicity, &sorted);
        let frobenius = apery.iter().copied().max().unwrap_or(0) - multiplicity;
        let max_gen = *sorted.last().unwrap();
        let window = (frobenius + 1 + 2 * max_gen) as usize;
        let membership: Vec<bool> = (0..=window as i64)
            .map(|z| z >= apery[z.rem_euclid(multiplicity) as usize])
            .collect();

        let generators: Vec<i64> = sorted
            .iter()
            .copied()
            .filter(|&g| !(1..g).any(|s| membership[s as usize] && membership[(g - s) as usize]))
            .collect();

        let genus = (0..=frobenius.max(-1))
            .filter(|&z| z >= 0 && !membership[z as usize])
            .count();
        let pseudo_frobenius = if frobenius < 0 {
            vec![-1]
        } else {
            (0..=frobenius)
                .filter(|&z| !membership[z as usize])
                .filter(|&z| generators.iter().all(|&g| membership[(z + g) as usize]))
                .collect()
        };

        Ok(Self {
            generators,
            frobenius,
            genus,
            membership,
            pseudo_frobenius,
        })
    }

    /// The semigroup ℕ itself.
    pub fn natural() -> Self {
        Self::from_generators(&[1]).expect("ℕ is a numerical semigroup")
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Generators as unsigned integers, convenient for rebuilding.
    pub fn generators_u64(&self) -> Vec<u64> {
        self.generators.iter().map(|&g| g as u64).collect()
    }

    /// `F(S) = max(ℤ \ S)`, with `F(ℕ) = -1`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps `#(ℕ \ S)`.
    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `PF(S)`, sorted. For ℕ this is `{-1}`.
    pub fn pseudo_frobenius(&self) -> &[i64] {
        &self.pseudo_frobenius
    }

    /// Cohen–Macaulay type `r(R) = #PF(S)`.
    pub fn type_r(&self) -> usize {
        self.pseudo_frobenius.len()
    }

    /// Smallest nonzero element, the multiplicity `e` of the ring.
    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Number of minimal generators, the embedding dimension `n`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Upper end of the tabulated membership window.
    pub fn window(&self) -> i64 {
        self.membership.len() as i64 - 1
    }

    pub fn is_natural(&self) -> bool {
        self.frobenius < 0
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < 0 {
            false
        } else if z > self.frobenius {
            true
        } else {
            self.membership[z as usize]
        }
    }

    /// Gaps `ℕ \ S` in increasing order.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        (0..=self.frobenius).filter(move |&z| !self.contains(z))
    }

    /// Elements of `S` in `[0, bound]`.
    pub fn elements_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&z| self.contains(z))
    }

    /// Least element of `S` in each residue class modulo `w`, indexed by
    /// residue.
    pub fn apery_set(&self, w: i64) -> Result<Vec<i64>> {
        if w <= 0 || !self.contains(w) {
            return Err(Error::NotMember(w));
        }
        let mut least = vec![i64::MAX; w as usize];
        let mut found = 0;
        let mut z = 0;
        while found < w {
            let r = (z % w) as usize;
            if least[r] == i64::MAX && self.contains(z) {
                least[r] = z;
                found += 1;
            }
            z += 1;
        }
        Ok(least)
    }

    /// `F = 2g - 1`; equivalently `r(R) = 1`, i.e. the ring is Gorenstein.
    pub fn is_symmetric(&self) -> bool {
        self.frobenius == 2 * self.genus as i64 - 1
    }

    /// `e = n` and `S ≠ ℕ`.
    pub fn has_minimal_multiplicity(&self) -> bool {
        !self.is_natural() && self.multiplicity() == self.generators.len() as i64
    }

    /// Whether every element of `self` lies in `other`.
    pub fn is_subsemigroup_of(&self, other: &NumericalSemigroup) -> bool {
        self.generators.iter().all(|&g| other.contains(g))
    }
}

// Everything else is derived from the minimal generators.
impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl core::hash::Hash for NumericalSemigroup {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.generators.hash(state);
    }
}

impl core::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

// Dijkstra on residues mod `modulus`: the least element of S in class r is the
// shortest path from 0 to r using generator-labelled edges.
fn apery_by_shortest_paths(modulus: i64, gens: &[i64]) -> Vec<i64> {
    let m = modulus as usize;
    let mut dist = vec![i64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let next = (r + g as usize) % m;
            let nd = d + g;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    dist
}
