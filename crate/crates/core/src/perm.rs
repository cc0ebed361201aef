use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{0, .., degree-1}` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint on 0..{degree}"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u128) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = base.compose(&acc).expect("same degree");
            }
            base = base.compose(&base).expect("same degree");
            e >>= 1;
        }
        acc
    }

    /// Acts as `self` on the first `degree` points and fixes `extra` more.
    pub fn extend_fixed(&self, extra: usize) -> Permutation {
        let n = self.degree();
        let mut images = self.images.clone();
        images.extend(n..n + extra);
        Permutation { images }
    }

    /// Places `self` on points `offset..offset+degree` of a permutation of `total` points.
    pub fn embed(&self, offset: usize, total: usize) -> Result<Permutation> {
        if offset + self.degree() > total {
            return Err(Error::InvalidArgument(format!(
                "cannot embed degree {} at offset {offset} into {total} points",
                self.degree()
            )));
        }
        let mut images: Vec<usize> = (0..total).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset + x;
        }
        Ok(Permutation { images })
    }

    /// Conjugate `c ∘ self ∘ c⁻¹`, i.e. the same action after relabeling points by `c`.
    pub fn conjugate_by(&self, c: &Permutation) -> Result<Permutation> {
        c.compose(self)?.compose(&c.inverse())
    }

    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }

    /// Nontrivial cycles, each starting from its smallest point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i != x)
            .map(|(i, _)| i)
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}
