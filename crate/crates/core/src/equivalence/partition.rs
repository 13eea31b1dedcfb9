//! cc-classes of a finite ring by union-find over all CC instances.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::EquivError;
use crate::fracpair::Fracpair;
use crate::ring::Ring;

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// The fracpairs of a finite ring grouped into cc-classes.
///
/// Class 0 is the class of `1/0`. The others are ordered by their
/// representative, which is the member with the smallest denominator (in
/// carrier order) and then the smallest numerator.
#[derive(Clone, Debug)]
pub struct EquivalencePartition<R: Ring> {
    ring: R,
    elements: Vec<R::Elem>,
    index: BTreeMap<R::Elem, usize>,
    class_of: Vec<usize>,
    reps: Vec<(usize, usize)>,
    members: Vec<Vec<(usize, usize)>>,
}

fn finite_elements<R: Ring>(ring: &R) -> Result<Vec<R::Elem>, EquivError> {
    ring.elements().ok_or_else(|| EquivError::Infinite(ring.name()))
}

/// Builds the partition; rejects infinite and non-reduced rings.
pub fn cc_partition<R: Ring>(ring: &R) -> Result<EquivalencePartition<R>, EquivError> {
    let els = finite_elements(ring)?;
    if let Some(w) = els.iter().find(|x| !ring.is_zero(x) && ring.is_zero(&ring.mul(x, x))) {
        return Err(EquivError::NotReduced { ring: ring.name(), witness: ring.render(w) });
    }
    Ok(build(ring, els))
}

/// Builds the partition without the reducedness check.
pub fn cc_partition_unchecked<R: Ring>(ring: &R) -> Result<EquivalencePartition<R>, EquivError> {
    Ok(build(ring, finite_elements(ring)?))
}

fn build<R: Ring>(ring: &R, els: Vec<R::Elem>) -> EquivalencePartition<R> {
    let n = els.len();
    let index: BTreeMap<R::Elem, usize> = els.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mul: Vec<Vec<usize>> = els.iter().map(|a| els.iter().map(|b| index[&ring.mul(a, b)]).collect()).collect();
    let pair = |num: usize, den: usize| num * n + den;

    // (x·z)/(y·z·z) ~ x/(y·z)
    let mut uf = UnionFind::new(n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let yz = mul[y][z];
                uf.union(pair(mul[x][z], mul[yz][z]), pair(x, yz));
            }
        }
    }

    let one = index[&ring.one()];
    let zero = index[&ring.zero()];
    let bottom_root = uf.find(pair(one, zero));
    let mut by_root: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for den in 0..n {
        for num in 0..n {
            by_root.entry(uf.find(pair(num, den))).or_default().push((num, den));
        }
    }
    // members are listed by (den, num), so the first one is the preferred
    // representative except for the class of 1/0
    let mut classes: Vec<((usize, usize), Vec<(usize, usize)>)> =
        by_root.into_iter().map(|(root, ms)| (if root == bottom_root { (one, zero) } else { ms[0] }, ms)).collect();
    classes.sort_by_key(|(rep, _)| (*rep != (one, zero), rep.1, rep.0));

    let mut class_of = vec![0; n * n];
    for (id, (_, ms)) in classes.iter().enumerate() {
        for &(num, den) in ms {
            class_of[pair(num, den)] = id;
        }
    }
    let (reps, members) = classes.into_iter().unzip();
    EquivalencePartition { ring: ring.clone(), elements: els, index, class_of, reps, members }
}

impl<R: Ring> EquivalencePartition<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// The ring's carrier in enumeration order.
    pub fn elements(&self) -> &[R::Elem] {
        &self.elements
    }

    pub fn class_count(&self) -> usize {
        self.reps.len()
    }

    /// The id of the class of `1/0`.
    pub fn bottom_class(&self) -> usize {
        0
    }

    fn elem_index(&self, e: &R::Elem) -> Result<usize, EquivError> {
        self.index.get(e).copied().ok_or_else(|| EquivError::ForeignElement(self.ring.render(e)))
    }

    pub fn class_of_parts(&self, num: &R::Elem, den: &R::Elem) -> Result<usize, EquivError> {
        let n = self.elements.len();
        Ok(self.class_of[self.elem_index(num)? * n + self.elem_index(den)?])
    }

    pub fn class_of(&self, a: &Fracpair<R>) -> Result<usize, EquivError> {
        if a.ring() != &self.ring {
            return Err(EquivError::MixedRings(a.ring().name(), self.ring.name()));
        }
        self.class_of_parts(a.num(), a.den())
    }

    fn fracpair(&self, (num, den): (usize, usize)) -> Fracpair<R> {
        Fracpair::new(&self.ring, self.elements[num].clone(), self.elements[den].clone())
    }

    /// # Panics
    /// If `class` is not below [`Self::class_count`].
    pub fn representative(&self, class: usize) -> Fracpair<R> {
        self.fracpair(self.reps[class])
    }

    pub fn representatives(&self) -> Vec<Fracpair<R>> {
        (0..self.class_count()).map(|c| self.representative(c)).collect()
    }

    /// Members ordered by denominator, then numerator.
    pub fn members(&self, class: usize) -> Vec<Fracpair<R>> {
        self.members[class].iter().map(|&p| self.fracpair(p)).collect()
    }

    pub fn same_class(&self, a: &Fracpair<R>, b: &Fracpair<R>) -> Result<bool, EquivError> {
        Ok(self.class_of(a)? == self.class_of(b)?)
    }

    /// The representative of `a`'s class.
    pub fn normalize(&self, a: &Fracpair<R>) -> Result<Fracpair<R>, EquivError> {
        Ok(self.representative(self.class_of(a)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, ModRing, ProductRing};
    use alloc::string::String;

    fn reps(n: u64) -> Vec<String> {
        let p = cc_partition(&ModRing::new(n).unwrap()).unwrap();
        p.representatives().iter().map(|f| f.render()).collect()
    }

    #[test]
    fn z6_has_twelve_classes() {
        assert_eq!(reps(6), ["1/0", "0/1", "1/1", "2/1", "3/1", "4/1", "5/1", "0/2", "1/2", "2/2", "0/3", "1/3"]);
    }

    #[test]
    fn prime_fields() {
        assert_eq!(reps(2), ["1/0", "0/1", "1/1"]);
        // over a field every x/d with d ≠ 0 is x·d⁻¹/1
        assert_eq!(reps(5), ["1/0", "0/1", "1/1", "2/1", "3/1", "4/1"]);
        let z3 = ModRing::new(3).unwrap();
        let p = cc_partition(&z3).unwrap();
        for x in 0..3 {
            assert_eq!(p.class_of(&Fracpair::new(&z3, x, 0)).unwrap(), p.bottom_class());
        }
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(matches!(cc_partition(&Integers), Err(EquivError::Infinite(_))));
        let z4 = ModRing::allow_non_reduced(4).unwrap();
        match cc_partition(&z4) {
            Err(EquivError::NotReduced { witness, .. }) => assert_eq!(witness, "2"),
            other => panic!("{other:?}"),
        }
        assert!(cc_partition_unchecked(&z4).is_ok());
    }

    #[test]
    fn classes_partition_all_pairs() {
        for n in [6u64, 10, 15, 30] {
            let r = ModRing::new(n).unwrap();
            let p = cc_partition(&r).unwrap();
            let total: usize = (0..p.class_count()).map(|c| p.members(c).len()).sum();
            assert_eq!(total, (n * n) as usize);
            for c in 0..p.class_count() {
                for m in p.members(c) {
                    assert_eq!(p.class_of(&m).unwrap(), c);
                }
                assert_eq!(p.class_of(&p.representative(c)).unwrap(), c);
            }
            // all CC instances land in one class
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let a = Fracpair::new(&r, x * z % n, y * z * z % n);
                        let b = Fracpair::new(&r, x, y * z % n);
                        assert!(p.same_class(&a, &b).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn product_ring_partition() {
        let r = ProductRing::new(ModRing::new(2).unwrap(), ModRing::new(3).unwrap());
        let p = cc_partition(&r).unwrap();
        // ℤ/2 × ℤ/3 ≅ ℤ/6
        assert_eq!(p.class_count(), 12);
        assert_eq!(p.representative(0).render(), "(1,1)/(0,0)");
    }

    #[test]
    fn foreign_operands() {
        let p = cc_partition(&ModRing::new(6).unwrap()).unwrap();
        let other = Fracpair::one(&ModRing::new(5).unwrap());
        assert!(matches!(p.class_of(&other), Err(EquivError::MixedRings(..))));
        let r6 = ModRing::new(6).unwrap();
        assert!(matches!(p.class_of(&Fracpair::new(&r6, 9, 1)), Err(EquivError::ForeignElement(_))));
    }
}
