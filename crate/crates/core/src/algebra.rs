//! Finite-dimensional associative algebras given by a basis and a
//! multiplication rule on basis elements.

use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::CycNumber;

/// Sparse product of two basis elements: `(basis index, coefficient)` pairs.
pub type BasisProduct = Vec<(usize, CycNumber)>;

/// A finite-dimensional associative algebra over Q(ζ_m), presented on a basis.
pub trait Algebra: Send + Sync + fmt::Debug {
    /// Identifies the algebra; elements with different names never mix.
    fn name(&self) -> &str;

    fn dim(&self) -> usize;

    /// Conductor of the field holding the structure constants.
    fn conductor(&self) -> u32;

    fn label(&self, b: usize) -> String;

    fn unit(&self) -> BasisProduct;

    fn mul_basis(&self, a: usize, b: usize) -> BasisProduct;

    /// Peirce data: basis element `b` lies in `e_l · A · e_r` for a complete set
    /// of orthogonal idempotents, so `b · c = 0` unless `r(b) == l(c)`.
    /// Returns `(l, r)` or `None` when the basis has no such structure.
    fn peirce(&self, _b: usize) -> Option<(usize, usize)> {
        None
    }

    /// Basis elements forming a complete set of orthogonal idempotents, if any.
    fn idempotents(&self) -> Option<Vec<usize>> {
        None
    }

    /// For bases where every product is zero or a single basis element with
    /// coefficient 1: `Some(product)`. `None` when the basis is not of that kind.
    fn mul_basis_unit(&self, _a: usize, _b: usize) -> Option<Option<usize>> {
        None
    }
}

pub type AlgebraRef = Arc<dyn Algebra>;

/// An algebra stored as an explicit structure-constant table.
pub struct TableAlgebra {
    name: String,
    conductor: u32,
    labels: Vec<String>,
    unit: BasisProduct,
    table: Vec<BasisProduct>,
}

impl TableAlgebra {
    /// `table[a * dim + b]` is the product of basis elements `a` and `b`.
    pub fn new(
        name: impl Into<String>,
        conductor: u32,
        labels: Vec<String>,
        unit: BasisProduct,
        table: Vec<BasisProduct>,
    ) -> Self {
        assert_eq!(table.len(), labels.len() * labels.len(), "table size");
        TableAlgebra {
            name: name.into(),
            conductor,
            labels,
            unit,
            table,
        }
    }

    /// Tabulates any algebra (useful for small cross-checks).
    pub fn tabulate(alg: &dyn Algebra) -> Self {
        let d = alg.dim();
        let mut table = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                table.push(alg.mul_basis(a, b));
            }
        }
        TableAlgebra::new(
            format!("table({})", alg.name()),
            alg.conductor(),
            (0..d).map(|b| alg.label(b)).collect(),
            alg.unit(),
            table,
        )
    }
}

impl fmt::Debug for TableAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TableAlgebra")
            .field("name", &self.name)
            .field("dim", &self.labels.len())
            .finish()
    }
}

impl Algebra for TableAlgebra {
    fn name(&self) -> &str {
        &self.name
    }

    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn conductor(&self) -> u32 {
        self.conductor
    }

    fn label(&self, b: usize) -> String {
        self.labels[b].clone()
    }

    fn unit(&self) -> BasisProduct {
        self.unit.clone()
    }

    fn mul_basis(&self, a: usize, b: usize) -> BasisProduct {
        self.table[a * self.labels.len() + b].clone()
    }
}

fn accumulate(into: &mut Vec<CycNumber>, terms: &BasisProduct, scale: &CycNumber) {
    for (k, c) in terms {
        into[*k] += &(c * scale);
    }
}

/// Product `(Σ u_i b_i)(Σ v_j b_j)` on dense coordinate vectors.
fn mul_dense(alg: &dyn Algebra, u: &[CycNumber], v: &[CycNumber]) -> Vec<CycNumber> {
    let m = alg.conductor();
    let mut out = vec![CycNumber::zero(m); alg.dim()];
    for (a, ca) in u.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (b, cb) in v.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            accumulate(&mut out, &alg.mul_basis(a, b), &(ca * cb));
        }
    }
    out
}

/// First basis triple `(a, b, c)` among `triples` with `(ab)c ≠ a(bc)`.
pub fn associativity_violation(
    alg: &dyn Algebra,
    triples: impl IntoIterator<Item = (usize, usize, usize)>,
) -> Option<(usize, usize, usize)> {
    let m = alg.conductor();
    let d = alg.dim();
    let basis = |i: usize| {
        let mut v = vec![CycNumber::zero(m); d];
        v[i] = CycNumber::one(m);
        v
    };
    triples.into_iter().find(|&(a, b, c)| {
        let (ea, eb, ec) = (basis(a), basis(b), basis(c));
        let left = mul_dense(alg, &mul_dense(alg, &ea, &eb), &ec);
        let right = mul_dense(alg, &ea, &mul_dense(alg, &eb, &ec));
        left != right
    })
}

/// First basis element on which the declared unit fails to be two-sided.
pub fn unit_violation(alg: &dyn Algebra) -> Option<usize> {
    let m = alg.conductor();
    let d = alg.dim();
    let mut unit = vec![CycNumber::zero(m); d];
    for (k, c) in alg.unit() {
        unit[k] = c;
    }
    (0..d).find(|&b| {
        let mut e = vec![CycNumber::zero(m); d];
        e[b] = CycNumber::one(m);
        mul_dense(alg, &unit, &e) != e || mul_dense(alg, &e, &unit) != e
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 2x2 matrix units E11, E12, E21, E22.
    pub(crate) fn matrix_units() -> TableAlgebra {
        let one = CycNumber::one(1);
        let mut table = Vec::new();
        for a in 0..4usize {
            for b in 0..4usize {
                let (i, j) = (a / 2, a % 2);
                let (k, l) = (b / 2, b % 2);
                table.push(if j == k { vec![(i * 2 + l, one.clone())] } else { vec![] });
            }
        }
        TableAlgebra::new(
            "M2",
            1,
            vec!["E11".into(), "E12".into(), "E21".into(), "E22".into()],
            vec![(0, one.clone()), (3, one)],
            table,
        )
    }

    #[test]
    fn matrix_units_are_associative_with_unit() {
        let m2 = matrix_units();
        let all = (0..4).flat_map(|a| (0..4).flat_map(move |b| (0..4).map(move |c| (a, b, c))));
        assert_eq!(associativity_violation(&m2, all), None);
        assert_eq!(unit_violation(&m2), None);
    }

    #[test]
    fn broken_table_is_detected() {
        let one = CycNumber::one(1);
        // basis {1, t} where right multiplication by 1 sends t to 1
        let table = vec![
            vec![(0, one.clone())],
            vec![(1, one.clone())],
            vec![(0, one.clone())],
            vec![(1, one.clone())],
        ];
        let bad = TableAlgebra::new("bad", 1, vec!["1".into(), "t".into()], vec![(0, one)], table);
        assert_eq!(unit_violation(&bad), Some(1));
    }
}
