//! Sparse elements of tensor powers `A^{⊗r}` of a finite-dimensional algebra.
//!
//! Terms are keyed by fixed-width index tuples and kept in lexicographic
//! order; zero coefficients are never stored. Rank 1 elements are ordinary
//! algebra elements and rank 0 elements are scalars.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{Algebra, AlgebraRef};
use crate::cyclotomic::CycNumber;
use crate::error::AlgebraError;
use crate::linalg::Matrix;

pub const MAX_RANK: usize = 6;

/// Basis tuple; slots past the rank are zero.
pub type Index = [u16; MAX_RANK];

/// Upper bound on `dim^rank` for inversion through a linear system.
pub const MAX_GENERAL_INVERSE_DIM: usize = 4096;

pub fn index(slots: &[usize]) -> Index {
    assert!(slots.len() <= MAX_RANK, "rank too large");
    let mut out = [0u16; MAX_RANK];
    for (o, &s) in out.iter_mut().zip(slots) {
        *o = u16::try_from(s).expect("basis index exceeds u16");
    }
    out
}

#[derive(Clone)]
pub struct TensorElement {
    parent: AlgebraRef,
    rank: usize,
    terms: BTreeMap<Index, CycNumber>,
}

/// Rank 1 tensors are the algebra's own elements.
pub type AlgebraElement = TensorElement;

impl TensorElement {
    pub fn zero(parent: &AlgebraRef, rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank too large");
        TensorElement {
            parent: parent.clone(),
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(parent: &AlgebraRef, c: CycNumber) -> Self {
        Self::from_terms(parent, 0, [([0u16; MAX_RANK], c)])
    }

    pub fn from_terms(
        parent: &AlgebraRef,
        rank: usize,
        terms: impl IntoIterator<Item = (Index, CycNumber)>,
    ) -> Self {
        let mut out = Self::zero(parent, rank);
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            match out.terms.entry(k) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += &c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        out
    }

    /// A single basis tuple with coefficient 1.
    pub fn basis(parent: &AlgebraRef, slots: &[usize]) -> Self {
        let c = CycNumber::one(parent.conductor());
        Self::from_terms(parent, slots.len(), [(index(slots), c)])
    }

    /// A rank 1 element from `(basis index, coefficient)` pairs.
    pub fn element(parent: &AlgebraRef, terms: impl IntoIterator<Item = (usize, CycNumber)>) -> Self {
        Self::from_terms(parent, 1, terms.into_iter().map(|(b, c)| (index(&[b]), c)))
    }

    /// `1 ⊗ … ⊗ 1` with `rank` factors.
    pub fn one(parent: &AlgebraRef, rank: usize) -> Self {
        let unit = Self::element(parent, parent.unit());
        let mut out = Self::scalar(parent, CycNumber::one(parent.conductor()));
        for _ in 0..rank {
            out = out.tensor(&unit).expect("same parent");
        }
        out
    }

    pub fn parent(&self) -> &AlgebraRef {
        &self.parent
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Index, CycNumber> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, slots: &[usize]) -> CycNumber {
        self.terms
            .get(&index(slots))
            .cloned()
            .unwrap_or_else(|| CycNumber::zero(self.parent.conductor()))
    }

    /// The value of a rank 0 element.
    pub fn as_scalar(&self) -> CycNumber {
        assert_eq!(self.rank, 0, "not a scalar");
        self.coefficient(&[])
    }

    pub fn add_term(&mut self, k: Index, c: &CycNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    fn same_parent(&self, other: &TensorElement) -> Result<(), AlgebraError> {
        if self.parent.name() != other.parent.name() {
            return Err(AlgebraError::ParentMismatch(
                self.parent.name().to_string(),
                other.parent.name().to_string(),
            ));
        }
        Ok(())
    }

    fn same_shape(&self, other: &TensorElement) -> Result<(), AlgebraError> {
        self.same_parent(other)?;
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&-&CycNumber::one(self.parent.conductor()))
    }

    pub fn scale(&self, s: &CycNumber) -> TensorElement {
        let mut out = Self::zero(&self.parent, self.rank);
        if s.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(k, c)| (*k, c * s)).collect();
        out
    }

    /// Product in the tensor-power algebra (componentwise on factors).
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.same_shape(other)?;
        let alg: &dyn Algebra = self.parent.as_ref();
        let r = self.rank;
        let mut acc: HashMap<Index, CycNumber> = HashMap::new();

        let unit_products = r > 0 && alg.mul_basis_unit(0, 0).is_some();
        let mut emit = |lk: &Index, lc: &CycNumber, rk: &Index, rc: &CycNumber| {
            if unit_products {
                let mut k = [0u16; MAX_RANK];
                for s in 0..r {
                    match alg.mul_basis_unit(lk[s] as usize, rk[s] as usize).flatten() {
                        Some(b) => k[s] = b as u16,
                        None => return,
                    }
                }
                let c = lc * rc;
                match acc.get_mut(&k) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(k, c);
                    }
                }
                return;
            }
            // expand the product slot by slot
            let mut partial: Vec<(Index, CycNumber)> = vec![([0u16; MAX_RANK], lc * rc)];
            for s in 0..r {
                let prod = alg.mul_basis(lk[s] as usize, rk[s] as usize);
                if prod.is_empty() {
                    return;
                }
                let mut next = Vec::with_capacity(partial.len() * prod.len());
                for (k, c) in &partial {
                    for (b, sc) in &prod {
                        let mut nk = *k;
                        nk[s] = *b as u16;
                        next.push((nk, c * sc));
                    }
                }
                partial = next;
            }
            for (k, c) in partial {
                match acc.get_mut(&k) {
                    Some(v) => *v += &c,
                    None => {
                        acc.insert(k, c);
                    }
                }
            }
        };

        let peirce_ok = r > 0 && (0..alg.dim()).all(|b| alg.peirce(b).is_some());
        if peirce_ok {
            let mut by_left: HashMap<Index, Vec<(&Index, &CycNumber)>> = HashMap::new();
            for (k, c) in &other.terms {
                let mut key = [0u16; MAX_RANK];
                for s in 0..r {
                    key[s] = alg.peirce(k[s] as usize).expect("peirce").0 as u16;
                }
                by_left.entry(key).or_default().push((k, c));
            }
            for (lk, lc) in &self.terms {
                let mut key = [0u16; MAX_RANK];
                for s in 0..r {
                    key[s] = alg.peirce(lk[s] as usize).expect("peirce").1 as u16;
                }
                if let Some(matches) = by_left.get(&key) {
                    for (rk, rc) in matches {
                        emit(lk, lc, rk, rc);
                    }
                }
            }
        } else {
            for (lk, lc) in &self.terms {
                for (rk, rc) in &other.terms {
                    emit(lk, lc, rk, rc);
                }
            }
        }
        Ok(Self::from_terms(&self.parent, r, acc))
    }

    /// `left · self · right` for `left`, `right` supported on tensor products of
    /// the algebra's orthogonal idempotents, computed termwise from the Peirce
    /// labels (`idempotents()[l]` carries label `l`). Falls back to two
    /// products when the shortcut does not apply.
    pub fn conjugate_diagonal(
        &self,
        left: &TensorElement,
        right: &TensorElement,
    ) -> Result<TensorElement, AlgebraError> {
        self.same_shape(left)?;
        self.same_shape(right)?;
        let alg = self.parent.as_ref();
        let r = self.rank;
        let shortcut = (|| {
            let idem = alg.idempotents()?;
            let mut label = HashMap::new();
            for (l, &b) in idem.iter().enumerate() {
                if alg.peirce(b)? != (l, l) {
                    return None;
                }
                label.insert(b as u16, l);
            }
            let diag = |e: &TensorElement| -> Option<HashMap<[usize; MAX_RANK], CycNumber>> {
                e.terms
                    .iter()
                    .map(|(k, c)| {
                        let mut key = [0usize; MAX_RANK];
                        for s in 0..r {
                            key[s] = *label.get(&k[s])?;
                        }
                        Some((key, c.clone()))
                    })
                    .collect()
            };
            Some((diag(left)?, diag(right)?))
        })();
        let Some((lmap, rmap)) = shortcut else {
            return left.mul(self)?.mul(right);
        };
        let mut out = Self::zero(&self.parent, r);
        for (k, c) in &self.terms {
            let (mut lk, mut rk) = ([0usize; MAX_RANK], [0usize; MAX_RANK]);
            for s in 0..r {
                let (l, rr) = alg.peirce(k[s] as usize).expect("peirce");
                lk[s] = l;
                rk[s] = rr;
            }
            let (Some(lc), Some(rc)) = (lmap.get(&lk), rmap.get(&rk)) else {
                continue;
            };
            out.terms.insert(*k, &(lc * c) * rc);
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Outer tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.same_parent(other)?;
        let r = self.rank + other.rank;
        if r > MAX_RANK {
            return Err(AlgebraError::RankTooLarge(r));
        }
        let mut out = Self::zero(&self.parent, r);
        for (lk, lc) in &self.terms {
            for (rk, rc) in &other.terms {
                let mut k = *lk;
                k[self.rank..r].copy_from_slice(&rk[..other.rank]);
                out.terms.insert(k, lc * rc);
            }
        }
        Ok(out)
    }

    /// Applies a linear map, given on basis elements, to tensor slot `slot`
    /// (0-based) and splices the rank `out_rank` image in its place.
    pub fn apply_on_factor(
        &self,
        slot: usize,
        out_rank: usize,
        f: impl Fn(usize) -> TensorElement,
    ) -> Result<TensorElement, AlgebraError> {
        if slot >= self.rank {
            return Err(AlgebraError::SlotOutOfRange {
                slot,
                rank: self.rank,
            });
        }
        let new_rank = self.rank - 1 + out_rank;
        if new_rank > MAX_RANK {
            return Err(AlgebraError::RankTooLarge(new_rank));
        }
        let mut cache: HashMap<u16, TensorElement> = HashMap::new();
        let mut acc: HashMap<Index, CycNumber> = HashMap::new();
        for (k, c) in &self.terms {
            let img = cache.entry(k[slot]).or_insert_with(|| {
                let img = f(k[slot] as usize);
                assert_eq!(img.rank, out_rank, "map image has wrong rank");
                img
            });
            self.same_parent(img)?;
            for (ik, ic) in &img.terms {
                let mut nk = [0u16; MAX_RANK];
                nk[..slot].copy_from_slice(&k[..slot]);
                nk[slot..slot + out_rank].copy_from_slice(&ik[..out_rank]);
                nk[slot + out_rank..new_rank].copy_from_slice(&k[slot + 1..self.rank]);
                let v = c * ic;
                match acc.get_mut(&nk) {
                    Some(e) => *e += &v,
                    None => {
                        acc.insert(nk, v);
                    }
                }
            }
        }
        Ok(Self::from_terms(&self.parent, new_rank, acc))
    }

    /// Re-expresses every slot in another algebra through a basis map
    /// (each image must be a rank 1 element of `target`).
    pub fn map_factors(
        &self,
        target: &AlgebraRef,
        f: impl Fn(usize) -> TensorElement,
    ) -> TensorElement {
        let mut cache: HashMap<u16, Vec<(u16, CycNumber)>> = HashMap::new();
        let mut current: HashMap<Index, CycNumber> =
            self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        for s in 0..self.rank {
            let mut next: HashMap<Index, CycNumber> = HashMap::new();
            for (k, c) in &current {
                let img = cache.entry(k[s]).or_insert_with(|| {
                    let e = f(k[s] as usize);
                    assert_eq!(e.rank, 1, "factor map must produce rank 1 elements");
                    assert_eq!(e.parent.name(), target.name(), "factor map target");
                    e.terms.iter().map(|(ik, ic)| (ik[0], ic.clone())).collect()
                });
                for (b, ic) in img.iter() {
                    let mut nk = *k;
                    nk[s] = *b;
                    let v = c * ic;
                    match next.get_mut(&nk) {
                        Some(e) => *e += &v,
                        None => {
                            next.insert(nk, v);
                        }
                    }
                }
            }
            cache.clear();
            current = next;
        }
        Self::from_terms(target, self.rank, current)
    }

    /// Two-sided inverse in the tensor-power algebra.
    ///
    /// Elements supported on tensor products of the algebra's orthogonal
    /// idempotents are inverted coefficientwise; anything else goes through the
    /// linear system `self · v = 1` over the full tensor basis.
    pub fn invert(&self) -> Result<TensorElement, AlgebraError> {
        let m = self.parent.conductor();
        if self.rank == 0 {
            let c = self.as_scalar();
            return c
                .inv()
                .map(|v| Self::scalar(&self.parent, v))
                .map_err(|_| AlgebraError::Singular {
                    witness: "zero scalar".into(),
                });
        }
        let one = Self::one(&self.parent, self.rank);
        if *self == one {
            return Ok(one);
        }
        if let Some(idem) = self.parent.idempotents() {
            let is_idem: Vec<bool> = {
                let mut v = vec![false; self.parent.dim()];
                for &i in &idem {
                    v[i] = true;
                }
                v
            };
            let diagonal = self
                .terms
                .keys()
                .all(|k| k[..self.rank].iter().all(|&s| is_idem[s as usize]));
            if diagonal {
                let expected = idem.len().pow(self.rank as u32);
                if self.terms.len() < expected {
                    let missing = first_missing_tuple(&idem, self.rank, &self.terms);
                    return Err(AlgebraError::Singular {
                        witness: format!(
                            "coefficient of idempotent tuple {} is zero",
                            self.render_index(&missing)
                        ),
                    });
                }
                let mut memo: HashMap<String, CycNumber> = HashMap::new();
                let mut out = Self::zero(&self.parent, self.rank);
                for (k, c) in &self.terms {
                    let key = format!("{c:?}");
                    let inv = match memo.get(&key) {
                        Some(v) => v.clone(),
                        None => {
                            let v = c.inv()?;
                            memo.insert(key, v.clone());
                            v
                        }
                    };
                    out.terms.insert(*k, inv);
                }
                return Ok(out);
            }
        }
        let d = self.parent.dim();
        let total = d.checked_pow(self.rank as u32).unwrap_or(usize::MAX);
        if total > MAX_GENERAL_INVERSE_DIM {
            return Err(AlgebraError::TooLarge(total));
        }
        let tuples: Vec<Index> = (0..total).map(|t| tuple_of(t, d, self.rank)).collect();
        let position: HashMap<Index, usize> =
            tuples.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut mat = Matrix::zeros(total, total + 1, m);
        for (col, k) in tuples.iter().enumerate() {
            let e = Self::from_terms(&self.parent, self.rank, [(*k, CycNumber::one(m))]);
            let img = self.mul(&e)?;
            for (ik, ic) in &img.terms {
                mat.set(position[ik], col, ic.clone());
            }
        }
        for (ik, ic) in &one.terms {
            mat.set(position[ik], total, ic.clone());
        }
        let ns = mat.nullspace();
        // a solution is a null vector with last coordinate -1
        let Some(sol) = ns.iter().find(|v| !v[total].is_zero()) else {
            let rank = Matrix::from_fn(total, total, m, |r, c| mat.get(r, c).clone()).rank();
            return Err(AlgebraError::Singular {
                witness: format!("left multiplication has rank {rank} < {total}"),
            });
        };
        let scale = (-&sol[total]).inv()?;
        let v = Self::from_terms(
            &self.parent,
            self.rank,
            tuples.iter().zip(sol).map(|(k, c)| (*k, c * &scale)),
        );
        if v.mul(self)? != one || self.mul(&v)? != one {
            let rank = Matrix::from_fn(total, total, m, |r, c| mat.get(r, c).clone()).rank();
            return Err(AlgebraError::Singular {
                witness: format!("left multiplication has rank {rank} < {total}"),
            });
        }
        Ok(v)
    }

    /// True iff every term lies on tuples whose slots all belong to `sub_basis`.
    pub fn in_span(&self, sub_basis: &[usize]) -> bool {
        self.first_outside(sub_basis).is_none()
    }

    /// First term with a slot outside `sub_basis`, rendered as a witness.
    pub fn first_outside(&self, sub_basis: &[usize]) -> Option<String> {
        let mut allowed = vec![false; self.parent.dim()];
        for &b in sub_basis {
            allowed[b] = true;
        }
        self.terms
            .iter()
            .find(|(k, _)| k[..self.rank].iter().any(|&s| !allowed[s as usize]))
            .map(|(k, c)| format!("{} * {}", c, self.render_index(k)))
    }

    /// Describes the first tuple where `self` and `other` differ.
    pub fn first_difference(&self, other: &TensorElement) -> Option<String> {
        if let Err(e) = self.same_shape(other) {
            return Some(e.to_string());
        }
        let zero = CycNumber::zero(self.parent.conductor());
        let mut keys: Vec<&Index> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let a = self.terms.get(k).unwrap_or(&zero);
            let b = other.terms.get(k).unwrap_or(&zero);
            (a != b).then(|| format!("at {}: {} vs {}", self.render_index(k), a, b))
        })
    }

    pub fn render_index(&self, k: &Index) -> String {
        if self.rank == 0 {
            return "1".into();
        }
        k[..self.rank]
            .iter()
            .map(|&s| self.parent.label(s as usize))
            .collect::<Vec<_>>()
            .join(" (x) ")
    }

    /// One `coefficient * tuple` line per term, lexicographic order.
    pub fn render(&self, symbol: &str) -> Vec<String> {
        self.terms
            .iter()
            .map(|(k, c)| format!("({}) * {}", c.render(symbol), self.render_index(k)))
            .collect()
    }
}

fn tuple_of(mut t: usize, d: usize, rank: usize) -> Index {
    let mut k = [0u16; MAX_RANK];
    for s in (0..rank).rev() {
        k[s] = (t % d) as u16;
        t /= d;
    }
    k
}

fn first_missing_tuple(idem: &[usize], rank: usize, terms: &BTreeMap<Index, CycNumber>) -> Index {
    let total = idem.len().pow(rank as u32);
    (0..total)
        .map(|t| {
            let pos = tuple_of(t, idem.len(), rank);
            let mut k = [0u16; MAX_RANK];
            for s in 0..rank {
                k[s] = idem[pos[s] as usize] as u16;
            }
            k
        })
        .find(|k| !terms.contains_key(k))
        .expect("some tuple is missing")
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        self.parent.name() == other.parent.name()
            && self.rank == other.rank
            && self.terms == other.terms
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement<{}, rank {}>[", self.parent.name(), self.rank)?;
        let lines = self.render("z");
        write!(f, "{}]", lines.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableAlgebra;
    use std::sync::Arc;

    fn m2() -> AlgebraRef {
        let one = CycNumber::one(1);
        let mut table = Vec::new();
        for a in 0..4usize {
            for b in 0..4usize {
                let (i, j) = (a / 2, a % 2);
                let (k, l) = (b / 2, b % 2);
                table.push(if j == k { vec![(i * 2 + l, one.clone())] } else { vec![] });
            }
        }
        Arc::new(TableAlgebra::new(
            "M2",
            1,
            vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            vec![(0, one.clone()), (3, one)],
            table,
        ))
    }

    fn int(v: i64) -> CycNumber {
        CycNumber::from_int(1, v)
    }

    #[test]
    fn unit_is_identity_for_products() {
        let a = m2();
        let v = TensorElement::from_terms(&a, 2, [(index(&[1, 2]), int(3)), (index(&[0, 0]), int(-1))]);
        let one = TensorElement::one(&a, 2);
        assert_eq!(one.mul(&v).unwrap(), v);
        assert_eq!(v.mul(&one).unwrap(), v);
    }

    #[test]
    fn tensor_concatenates_and_counts() {
        let a = m2();
        let one = TensorElement::one(&a, 1);
        let oo = one.tensor(&one).unwrap();
        assert_eq!(oo, TensorElement::one(&a, 2));
        let x = TensorElement::basis(&a, &[1]);
        let y = TensorElement::basis(&a, &[2]);
        assert_eq!(x.tensor(&y).unwrap().len(), 1);
        assert_eq!(oo.tensor(&one).unwrap().len(), 8);
    }

    #[test]
    fn general_inverse_and_singular_witness() {
        let a = m2();
        // [[1,1],[0,1]] ⊗ [[2,0],[0,1]]
        let u = TensorElement::element(&a, [(0, int(1)), (1, int(1)), (3, int(1))]);
        let w = TensorElement::element(&a, [(0, int(2)), (3, int(1))]);
        let t = u.tensor(&w).unwrap();
        let inv = t.invert().unwrap();
        assert_eq!(t.mul(&inv).unwrap(), TensorElement::one(&a, 2));
        assert_eq!(inv.invert().unwrap(), t);
        let nil = TensorElement::basis(&a, &[1]);
        match nil.invert() {
            Err(AlgebraError::Singular { witness }) => assert!(witness.contains("rank")),
            other => panic!("expected singular, got {other:?}"),
        }
    }

    #[test]
    fn apply_on_factor_contracts_and_expands() {
        let a = m2();
        let t = TensorElement::from_terms(&a, 2, [(index(&[0, 3]), int(5)), (index(&[1, 3]), int(2))]);
        // trace functional on slot 0
        let tr = |b: usize| {
            let v = if b == 0 || b == 3 { int(1) } else { int(0) };
            TensorElement::scalar(&a, v)
        };
        let r = t.apply_on_factor(0, 0, tr).unwrap();
        assert_eq!(r, TensorElement::from_terms(&a, 1, [(index(&[3]), int(5))]));
        let same = t.apply_on_factor(1, 1, |b| TensorElement::basis(&a, &[b])).unwrap();
        assert_eq!(same, t);
        assert!(matches!(
            t.apply_on_factor(2, 1, |b| TensorElement::basis(&a, &[b])),
            Err(AlgebraError::SlotOutOfRange { .. })
        ));
    }

    #[test]
    fn apply_on_disjoint_factors_commutes() {
        let a = m2();
        let t = TensorElement::from_terms(
            &a,
            3,
            [(index(&[0, 1, 2]), int(2)), (index(&[3, 3, 1]), int(-1)), (index(&[1, 0, 0]), int(4))],
        );
        let transpose = |b: usize| TensorElement::basis(&a, &[(b % 2) * 2 + b / 2]);
        let double = |b: usize| TensorElement::element(&a, [(b, int(2)), (0, int(1))]);
        let ab = t.apply_on_factor(0, 1, transpose).unwrap().apply_on_factor(2, 1, double).unwrap();
        let ba = t.apply_on_factor(2, 1, double).unwrap().apply_on_factor(0, 1, transpose).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn in_span_support_test() {
        let a = m2();
        assert!(TensorElement::zero(&a, 2).in_span(&[]));
        let t = TensorElement::from_terms(&a, 2, [(index(&[0, 3]), int(1))]);
        assert!(t.in_span(&[0, 3]));
        assert!(!t.in_span(&[0]));
    }

    #[test]
    fn mismatches_are_errors() {
        let a = m2();
        let r1 = TensorElement::one(&a, 1);
        let r2 = TensorElement::one(&a, 2);
        assert!(matches!(r1.mul(&r2), Err(AlgebraError::RankMismatch(1, 2))));
    }
}
