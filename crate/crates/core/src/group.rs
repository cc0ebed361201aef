//! Finite permutation groups given by generators and a known order, with the
//! cyclic, dihedral, direct-sum and parallel-product constructions.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::spec::CyclicSpec;

/// Default cap on the number of elements we are willing to list explicitly.
pub const DEFAULT_MATERIALIZATION_CAP: u128 = 1_000_000;

/// Groups at most this large keep their sorted element list from construction.
const EAGER_ELEMENTS: u128 = 4096;

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: u128,
    elements: Option<Vec<Permutation>>,
}

impl PermGroup {
    /// Closes `generators` under composition. Errors once the closure passes `cap`.
    pub fn generate(degree: usize, generators: Vec<Permutation>, cap: u128) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let elements = closure(degree, &generators, cap)?;
        Ok(PermGroup {
            degree,
            generators,
            order: elements.len() as u128,
            elements: Some(elements),
        })
    }

    /// A group whose order is known independently (a formula or an
    /// orbit-stabilizer count). Small groups are materialized immediately.
    pub fn with_order(degree: usize, generators: Vec<Permutation>, order: u128) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let elements = if order <= EAGER_ELEMENTS {
            let els = closure(degree, &generators, order)?;
            if els.len() as u128 != order {
                return Err(Error::InvalidArgument(format!(
                    "generators produce {} elements, declared order {order}",
                    els.len()
                )));
            }
            Some(els)
        } else {
            None
        };
        Ok(PermGroup {
            degree,
            generators,
            order,
            elements,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            order: 1,
            elements: Some(vec![Permutation::identity(degree)]),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_materialized(&self) -> bool {
        self.elements.is_some()
    }

    /// Sorted element list, computed on demand up to `cap` elements.
    pub fn elements(&self, cap: u128) -> Result<Vec<Permutation>> {
        match &self.elements {
            Some(els) => Ok(els.clone()),
            None => {
                if self.order > cap {
                    return Err(Error::MaterializationCap {
                        order: self.order,
                        cap,
                    });
                }
                closure(self.degree, &self.generators, cap)
            }
        }
    }

    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        match &self.elements {
            Some(els) => Ok(els.binary_search(g).is_ok()),
            None => Ok(self
                .elements(DEFAULT_MATERIALIZATION_CAP)?
                .binary_search(g)
                .is_ok()),
        }
    }

    /// `self ⊆ other`, decided by checking generators.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        if !other.order.is_multiple_of(self.order) {
            return Ok(false);
        }
        if let Some(els) = &other.elements {
            return Ok(self.generators.iter().all(|g| els.binary_search(g).is_ok()));
        }
        let els = other.elements(DEFAULT_MATERIALIZATION_CAP)?;
        Ok(self.generators.iter().all(|g| els.binary_search(g).is_ok()))
    }

    /// Vertex orbits, each sorted, listed by smallest member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.degree);
        for g in &self.generators {
            for x in 0..self.degree {
                uf.union(x, g.apply(x));
            }
        }
        uf.classes()
    }
}

/// Set equality of two groups on the same point set.
pub fn group_equals(a: &PermGroup, b: &PermGroup) -> Result<bool> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch {
            left: a.degree,
            right: b.degree,
        });
    }
    if a.order != b.order {
        return Ok(false);
    }
    // equal orders: one inclusion suffices
    a.is_subgroup_of(b)
}

pub fn contains(a: &PermGroup, g: &Permutation) -> Result<bool> {
    a.contains(g)
}

fn check_degrees(degree: usize, gens: &[Permutation]) -> Result<()> {
    if degree == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    for g in gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    Ok(())
}

fn closure(degree: usize, gens: &[Permutation], cap: u128) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.compose(&x)?;
            if !seen.contains(&y) {
                if seen.len() as u128 >= cap {
                    return Err(Error::MaterializationCap {
                        order: seen.len() as u128 + 1,
                        cap,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut els: Vec<Permutation> = seen.into_iter().collect();
    els.sort_unstable();
    Ok(els)
}

/// The generator of the cyclic group described by `spec`: it advances every
/// nontrivial orbit by one position and fixes the trivial ones.
pub fn cyclic_generator(spec: &CyclicSpec) -> Permutation {
    let layout = spec.layout();
    let mut images: Vec<usize> = (0..layout.degree()).collect();
    for o in layout.nontrivial() {
        for i in 0..o.size {
            images[o.base + i] = o.vertex(i + 1);
        }
    }
    Permutation::from_images_unchecked(images)
}

pub fn cyclic_group(spec: &CyclicSpec) -> Result<PermGroup> {
    if spec.degree() == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let gens = if spec.nontrivial_count() == 0 {
        Vec::new()
    } else {
        vec![cyclic_generator(spec)]
    };
    PermGroup::with_order(spec.degree(), gens, spec.order())
}

/// Symmetries of the `n`-cycle `0 - 1 - .. - (n-1) - 0`.
pub fn dihedral_group(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(Error::DegreeTooSmall { min: 3, got: n });
    }
    let rotation = Permutation::from_images_unchecked((0..n).map(|i| (i + 1) % n).collect());
    let reflection = Permutation::from_images_unchecked((0..n).map(|i| (n - i) % n).collect());
    PermGroup::with_order(n, vec![rotation, reflection], 2 * n as u128)
}

pub fn symmetric_group(n: usize) -> Result<PermGroup> {
    if n == 0 {
        return Err(Error::DegreeTooSmall { min: 1, got: 0 });
    }
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]])?);
    }
    if n >= 3 {
        let cyc: Vec<usize> = (0..n).collect();
        gens.push(Permutation::from_cycles(n, &[&cyc])?);
    }
    let order = (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x));
    PermGroup::with_order(n, gens, order.ok_or(Error::OrderOverflow)?)
}

/// `A ⊕ B` acting componentwise on the disjoint union, `A`'s points first.
pub fn direct_sum(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let total = a.degree + b.degree;
    let mut gens = Vec::new();
    for g in &a.generators {
        gens.push(g.embed(0, total)?);
    }
    for g in &b.generators {
        gens.push(g.embed(a.degree, total)?);
    }
    let order = a.order.checked_mul(b.order).ok_or(Error::OrderOverflow)?;
    PermGroup::with_order(total, gens, order)
}

/// `A^(r)`: every element of `A` acts simultaneously on `r` copies of its points.
pub fn parallel_product(a: &PermGroup, r: usize) -> Result<PermGroup> {
    if r == 0 {
        return Err(Error::InvalidArgument("parallel product needs r >= 1".into()));
    }
    let n = a.degree;
    let gens = a
        .generators
        .iter()
        .map(|g| {
            let images = (0..n * r)
                .map(|x| (x / n) * n + g.apply(x % n))
                .collect();
            Permutation::from_images_unchecked(images)
        })
        .collect();
    PermGroup::with_order(n * r, gens, a.order)
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root so that roots are class minima.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut index = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = out.len();
                out.push(Vec::new());
            }
            out[index[r]].push(x);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: u64, sizes: &[u64], fixed: usize) -> CyclicSpec {
        CyclicSpec::from_orbit_sizes(p, sizes, fixed).unwrap()
    }

    fn assert_group_axioms(g: &PermGroup) {
        let els = g.elements(DEFAULT_MATERIALIZATION_CAP).unwrap();
        assert_eq!(els.len() as u128, g.order());
        assert!(els.contains(&Permutation::identity(g.degree())));
        for a in &els {
            assert!(g.contains(&a.inverse()).unwrap());
            for b in &els {
                assert!(g.contains(&a.compose(b).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn cyclic_examples() {
        let c = cyclic_group(&spec(3, &[3, 3], 0)).unwrap();
        assert_eq!((c.degree(), c.order()), (6, 3));
        assert_eq!(c.generators()[0].to_string(), "(0 1 2)(3 4 5)");
        let s2 = cyclic_group(&spec(2, &[2], 0)).unwrap();
        assert_eq!((s2.degree(), s2.order()), (2, 2));
        let big = cyclic_group(&spec(5, &[25, 5], 0)).unwrap();
        assert_eq!((big.degree(), big.order()), (30, 25));
        assert_eq!(big.generators()[0].order(), 25);
        assert_group_axioms(&big);
        assert_eq!(big.orbits(), spec(5, &[25, 5], 0).layout().orbits().iter().map(|o| o.vertices().collect::<Vec<_>>()).collect::<Vec<_>>());
    }

    #[test]
    fn identity_spec_is_trivial_group() {
        let g = cyclic_group(&spec(3, &[], 4)).unwrap();
        assert_eq!((g.degree(), g.order()), (4, 1));
        assert!(g.generators().is_empty());
    }

    #[test]
    fn dihedral_examples() {
        let d3 = dihedral_group(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(group_equals(&d3, &symmetric_group(3).unwrap()).unwrap());
        assert_eq!(dihedral_group(5).unwrap().order(), 10);
        let d4 = dihedral_group(4).unwrap();
        let refl = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
        let rot = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert!(d4.contains(&refl).unwrap());
        assert!(d4.contains(&rot).unwrap());
        assert_group_axioms(&d4);
        assert!(dihedral_group(2).is_err());
    }

    #[test]
    fn sums_and_products() {
        let i1 = PermGroup::trivial(1);
        let i2 = direct_sum(&i1, &i1).unwrap();
        assert_eq!((i2.degree(), i2.order()), (2, 1));
        let c3 = cyclic_group(&spec(3, &[3], 0)).unwrap();
        let c3c3 = direct_sum(&c3, &c3).unwrap();
        assert_eq!((c3c3.degree(), c3c3.order()), (6, 9));
        assert_group_axioms(&c3c3);
        let s2 = symmetric_group(2).unwrap();
        let s = direct_sum(&s2, &i1).unwrap();
        assert_eq!((s.degree(), s.order()), (3, 2));

        let par = parallel_product(&c3, 2).unwrap();
        assert_eq!((par.degree(), par.order()), (6, 3));
        assert!(group_equals(&par, &cyclic_group(&spec(3, &[3, 3], 0)).unwrap()).unwrap());
        let one = parallel_product(&c3, 1).unwrap();
        assert!(group_equals(&one, &c3).unwrap());
        let c5 = cyclic_group(&spec(5, &[5], 0)).unwrap();
        let p5 = parallel_product(&c5, 2).unwrap();
        assert_eq!((p5.degree(), p5.order()), (10, 5));
    }

    #[test]
    fn equality_and_membership() {
        let c3c3 = cyclic_group(&spec(3, &[3, 3], 0)).unwrap();
        assert!(group_equals(&c3c3, &c3c3).unwrap());
        let c3 = cyclic_group(&spec(3, &[3], 0)).unwrap();
        assert!(!group_equals(&c3, &dihedral_group(3).unwrap()).unwrap());
        let refl = Permutation::from_cycles(6, &[&[1, 2], &[4, 5]]).unwrap();
        assert!(!contains(&c3c3, &refl).unwrap());
        assert!(matches!(
            group_equals(&c3, &c3c3),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn materialization_cap() {
        let s10 = symmetric_group(10).unwrap();
        assert!(matches!(
            s10.elements(1000),
            Err(Error::MaterializationCap { .. })
        ));
        assert!(PermGroup::generate(10, s10.generators().to_vec(), 1000).is_err());
    }
}
