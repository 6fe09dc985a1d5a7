//! Finite abelian groups `Z_{n1} × … × Z_{nk}`, their characters, and finite
//! semigroup tables.

use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbGroup {
    pub factors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GroupElem(pub Vec<u32>);

/// Character of a finite abelian group, identified with a group element
/// through the standard pairing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub Vec<u32>);

impl AbGroup {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidElement("invariant factors must be positive".into()));
        }
        Ok(AbGroup { factors })
    }

    pub fn cyclic(n: u32) -> Self {
        AbGroup { factors: vec![n] }
    }

    pub fn trivial() -> Self {
        AbGroup { factors: vec![] }
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.factors.iter().fold(1, |a, &b| a.lcm(&b))
    }

    /// Cyclotomic order used for scalars attached to this group.
    pub fn field_order(&self) -> u32 {
        (self.order() as u32).lcm(&4)
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn identity(&self) -> GroupElem {
        GroupElem(vec![0; self.factors.len()])
    }

    pub fn trivial_character(&self) -> Character {
        Character(vec![0; self.factors.len()])
    }

    /// Element with enumeration index `idx`; the last coordinate varies fastest.
    pub fn element(&self, idx: usize) -> GroupElem {
        let mut coords = vec![0; self.factors.len()];
        let mut rest = idx;
        for (c, &n) in coords.iter_mut().zip(&self.factors).rev() {
            *c = (rest % n as usize) as u32;
            rest /= n as usize;
        }
        GroupElem(coords)
    }

    pub fn index_of(&self, g: &GroupElem) -> usize {
        g.0.iter().zip(&self.factors).fold(0, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn elements(&self) -> Vec<GroupElem> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    pub fn characters(&self) -> Vec<Character> {
        self.elements().into_iter().map(|g| Character(g.0)).collect()
    }

    /// Canonical generators `(0,…,1,…,0)`.
    pub fn generators(&self) -> Vec<GroupElem> {
        (0..self.rank())
            .map(|i| {
                let mut c = vec![0; self.rank()];
                c[i] = 1 % self.factors[i];
                GroupElem(c)
            })
            .collect()
    }

    pub fn character_generators(&self) -> Vec<Character> {
        self.generators().into_iter().map(|g| Character(g.0)).collect()
    }

    pub fn contains(&self, g: &GroupElem) -> bool {
        g.0.len() == self.rank() && g.0.iter().zip(&self.factors).all(|(&c, &n)| c < n)
    }

    pub fn check(&self, g: &GroupElem) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!("{:?} is not an element of Z{:?}", g.0, self.factors)))
        }
    }

    pub fn check_char(&self, chi: &Character) -> Result<()> {
        self.check(&GroupElem(chi.0.clone()))
    }

    pub fn op(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        GroupElem(a.0.iter().zip(&b.0).zip(&self.factors).map(|((&x, &y), &n)| (x + y) % n).collect())
    }

    pub fn inverse(&self, a: &GroupElem) -> GroupElem {
        GroupElem(a.0.iter().zip(&self.factors).map(|(&x, &n)| (n - x) % n).collect())
    }

    /// `a^k` in multiplicative notation, i.e. `k·a` additively.
    pub fn power(&self, a: &GroupElem, k: i64) -> GroupElem {
        GroupElem(a.0.iter().zip(&self.factors).map(|(&x, &n)| (x as i64 * k).rem_euclid(n as i64) as u32).collect())
    }

    pub fn elem_order(&self, a: &GroupElem) -> u32 {
        a.0.iter().zip(&self.factors).fold(1, |acc, (&x, &n)| acc.lcm(&(n / n.gcd(&x))))
    }

    pub fn char_mul(&self, a: &Character, b: &Character) -> Character {
        Character(self.op(&GroupElem(a.0.clone()), &GroupElem(b.0.clone())).0)
    }

    pub fn char_power(&self, a: &Character, k: i64) -> Character {
        Character(self.power(&GroupElem(a.0.clone()), k).0)
    }

    pub fn char_order(&self, a: &Character) -> u32 {
        self.elem_order(&GroupElem(a.0.clone()))
    }

    /// Exponent `e` with `χ(g) = ζ_exp^e`, where `exp` is the group exponent.
    pub fn pairing_exponent(&self, chi: &Character, g: &GroupElem) -> u32 {
        let e = self.exponent() as u64;
        let s: u64 = chi.0.iter().zip(&g.0).zip(&self.factors).map(|((&c, &x), &n)| (e / n as u64) * c as u64 * x as u64).sum();
        (s % e) as u32
    }

    pub fn pairs_trivially(&self, chi: &Character, g: &GroupElem) -> bool {
        self.pairing_exponent(chi, g) == 0
    }

    /// Subgroup of characters generated by `lambda`.
    pub fn close_characters(&self, lambda: &[Character]) -> Result<Vec<Character>> {
        for c in lambda {
            self.check_char(c)?;
        }
        let elems: Vec<GroupElem> = lambda.iter().map(|c| GroupElem(c.0.clone())).collect();
        Ok(self.close(&elems).into_iter().map(|g| Character(g.0)).collect())
    }

    /// Subgroup generated by the given elements, sorted by enumeration index.
    pub fn close(&self, gens: &[GroupElem]) -> Vec<GroupElem> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(self.index_of(&self.identity()));
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.op(&x, g);
                if set.insert(self.index_of(&y)) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().map(|i| self.element(i)).collect()
    }

    pub fn is_subgroup(&self, set: &[GroupElem]) -> bool {
        let idx: BTreeSet<usize> = set.iter().map(|g| self.index_of(g)).collect();
        idx.contains(&self.index_of(&self.identity()))
            && set.iter().all(|a| set.iter().all(|b| idx.contains(&self.index_of(&self.op(a, b)))))
    }

    /// All subgroups, each sorted by enumeration index.
    pub fn subgroups(&self) -> Vec<Vec<GroupElem>> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let trivial = vec![self.identity()];
        let key = |s: &[GroupElem]| s.iter().map(|g| self.index_of(g)).collect::<Vec<_>>();
        seen.insert(key(&trivial));
        let mut queue = vec![trivial];
        let mut out = Vec::new();
        while let Some(h) = queue.pop() {
            for g in self.elements() {
                let mut gens = h.clone();
                gens.push(g);
                let k = self.close(&gens);
                if seen.insert(key(&k)) {
                    queue.push(k);
                }
            }
            out.push(h);
        }
        out.sort_by_key(|s| (s.len(), key(s)));
        out
    }
}

/// Evaluates `χ(g) = ζ_N^{Σ (N/n_i) χ_i g_i}` with `N = lcm(|G|, 4)`.
pub fn char_eval(group: &AbGroup, chi: &Character, g: &GroupElem) -> Result<Scalar> {
    group.check_char(chi)?;
    group.check(g)?;
    let n = group.field_order();
    let e = group.pairing_exponent(chi, g) as i64 * (n / group.exponent()) as i64;
    Ok(Scalar::root_of_unity(n, e))
}

/// `Λ^⊥ = {g : λ(g) = 1 for all λ ∈ Λ}`; `Λ` is closed first.
pub fn orth_complement(lambda: &[Character], group: &AbGroup) -> Result<Vec<GroupElem>> {
    for c in lambda {
        group.check_char(c)?;
    }
    Ok(group.elements().into_iter().filter(|g| lambda.iter().all(|c| group.pairs_trivially(c, g))).collect())
}

/// Characters trivial on every element of `h`.
pub fn char_orth_complement(h: &[GroupElem], group: &AbGroup) -> Result<Vec<Character>> {
    for g in h {
        group.check(g)?;
    }
    Ok(group.characters().into_iter().filter(|c| h.iter().all(|g| group.pairs_trivially(c, g))).collect())
}

/// `[Ĝ : Λ]` for a subgroup `Λ` of the dual.
pub fn subgroup_index(lambda: &[Character], group: &AbGroup) -> Result<usize> {
    for c in lambda {
        group.check_char(c)?;
    }
    let elems: Vec<GroupElem> = lambda.iter().map(|c| GroupElem(c.0.clone())).collect();
    if !group.is_subgroup(&elems) {
        return Err(Error::NotClosed);
    }
    let distinct: BTreeSet<usize> = elems.iter().map(|g| group.index_of(g)).collect();
    Ok(group.order() / distinct.len())
}

impl From<GroupElem> for Character {
    fn from(g: GroupElem) -> Self {
        Character(g.0)
    }
}

impl From<Character> for GroupElem {
    fn from(c: Character) -> Self {
        GroupElem(c.0)
    }
}

/// Finite semigroup given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupTable {
    pub size: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub identity: Option<usize>,
}

impl SemigroupTable {
    pub fn new(table: Vec<Vec<usize>>, identity: Option<usize>) -> Result<Self> {
        let size = table.len();
        for row in &table {
            if row.len() != size {
                return Err(Error::DimensionMismatch { expected: size, found: row.len() });
            }
            if row.iter().any(|&x| x >= size) {
                return Err(Error::NotClosed);
            }
        }
        let t = SemigroupTable { size, table, identity };
        if let Some(e) = identity {
            if e >= size || (0..size).any(|x| t.mul(e, x) != x || t.mul(x, e) != x) {
                return Err(Error::InvalidElement(format!("{e} is not a two-sided identity")));
            }
        }
        Ok(t)
    }

    /// Detects a two-sided identity when none is declared.
    pub fn with_detected_identity(table: Vec<Vec<usize>>) -> Result<Self> {
        let t = SemigroupTable::new(table, None)?;
        let e = (0..t.size).find(|&e| (0..t.size).all(|x| t.mul(e, x) == x && t.mul(x, e) == x));
        Ok(SemigroupTable { identity: e, ..t })
    }

    pub fn from_group(group: &AbGroup) -> Self {
        let n = group.order();
        let table = (0..n)
            .map(|i| (0..n).map(|j| group.index_of(&group.op(&group.element(i), &group.element(j)))).collect())
            .collect();
        SemigroupTable { size: n, table, identity: Some(group.index_of(&group.identity())) }
    }

    /// The symmetric group on three letters; index 0 is the identity.
    pub fn s3() -> Self {
        // permutations of {0,1,2} in a fixed order; composition (p∘q)(x) = p(q(x))
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let find = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = (0..6)
            .map(|a| (0..6).map(|b| find([perms[a][perms[b][0]], perms[a][perms[b][1]], perms[a][perms[b][2]]])).collect())
            .collect();
        SemigroupTable { size: 6, table, identity: Some(0) }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_associative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| (0..self.size).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Whether `a` has a two-sided inverse; `None` when no identity is declared.
    pub fn is_invertible(&self, a: usize) -> Option<bool> {
        let e = self.identity?;
        Some((0..self.size).any(|b| self.mul(a, b) == e && self.mul(b, a) == e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_generator_pairing_is_i() {
        let g = AbGroup::cyclic(4);
        let v = char_eval(&g, &Character(vec![1]), &GroupElem(vec![1])).unwrap();
        assert_eq!(v, Scalar::i());
        assert!(char_eval(&g, &Character(vec![3]), &g.identity()).unwrap().is_one());
    }

    #[test]
    fn orthogonality_on_klein_group() {
        let g = AbGroup::new(vec![2, 2]).unwrap();
        for chi in g.characters().into_iter().skip(1) {
            let s: Scalar = g.elements().iter().map(|x| char_eval(&g, &chi, x).unwrap()).sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn complement_of_squares_in_z4() {
        let g = AbGroup::cyclic(4);
        let lambda = g.close_characters(&[Character(vec![2])]).unwrap();
        let h = orth_complement(&lambda, &g).unwrap();
        assert_eq!(h, vec![GroupElem(vec![0]), GroupElem(vec![2])]);
        assert_eq!(subgroup_index(&lambda, &g).unwrap(), 2);
        assert_eq!(subgroup_index(&[g.trivial_character()], &g).unwrap(), 4);
        assert_eq!(subgroup_index(&g.characters(), &g).unwrap(), 1);
        assert_eq!(subgroup_index(&[Character(vec![1])], &g), Err(Error::NotClosed));
        assert_eq!(orth_complement(&g.characters(), &g).unwrap(), vec![g.identity()]);
    }

    #[test]
    fn wrong_group_rejected() {
        let g = AbGroup::cyclic(4);
        assert!(char_eval(&g, &Character(vec![1, 0]), &g.identity()).is_err());
        assert!(orth_complement(&[Character(vec![5])], &g).is_err());
    }

    #[test]
    fn s3_is_noncommutative_group() {
        let s = SemigroupTable::s3();
        assert!(s.is_associative());
        assert!(!(0..6).all(|a| (0..6).all(|b| s.commute(a, b))));
        assert!((0..6).all(|a| s.is_invertible(a) == Some(true)));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(AbGroup::cyclic(4).subgroups().len(), 3);
        assert_eq!(AbGroup::new(vec![2, 2]).unwrap().subgroups().len(), 5);
    }
}
