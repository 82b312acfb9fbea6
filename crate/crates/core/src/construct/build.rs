use rayon::prelude::*;

use super::expr::RingExpr;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::ring::{table_file, Elem, FiniteRing, Side};

/// Builds the ring named by `expr` with default limits.
pub fn build(expr: &RingExpr) -> Result<FiniteRing> {
    build_with(expr, &Limits::default())
}

/// Builds the ring named by `expr`; every result goes through full axiom
/// validation.
pub fn build_with(expr: &RingExpr, limits: &Limits) -> Result<FiniteRing> {
    let cap = limits.max_order;
    match expr {
        RingExpr::Z(n) => integers_mod(*n, cap),
        RingExpr::Mat(n, e) => {
            let base = build_with(e, limits)?;
            tabulate(&MatrixCarrier::new(&base, *n, MatrixShape::Full), cap)
        }
        RingExpr::UT(n, e) => {
            let base = build_with(e, limits)?;
            tabulate(&MatrixCarrier::new(&base, *n, MatrixShape::Upper), cap)
        }
        RingExpr::EqDiagUT(n, e) => {
            let base = build_with(e, limits)?;
            tabulate(&MatrixCarrier::new(&base, *n, MatrixShape::EqualDiagonal), cap)
        }
        RingExpr::Triv(e) => trivial_extension(&build_with(e, limits)?, cap),
        RingExpr::Dorroh(e, k) => dorroh_extension(&build_with(e, limits)?, *k, cap),
        RingExpr::PolyNil(e, n) => truncated_polynomials(&build_with(e, limits)?, *n, cap),
        RingExpr::PolyMod(e, coeffs) => {
            let base = build_with(e, limits)?;
            if !base.is_commutative() {
                return Err(Error::Construction(
                    "PolyMod needs a commutative coefficient ring".into(),
                ));
            }
            let lower = coeffs
                .iter()
                .map(|c| base.element_by_name(c))
                .collect::<Result<Vec<_>>>()?;
            tabulate(&Polynomials::modulo(&base, lower), cap)
        }
        RingExpr::Prod(a, b) => direct_product(&build_with(a, limits)?, &build_with(b, limits)?, cap),
        RingExpr::GroupRing(e, dims) => {
            if dims.contains(&0) {
                return Err(Error::Construction("cyclic factor orders must be positive".into()));
            }
            let base = build_with(e, limits)?;
            tabulate(&GroupRing::new(&base, dims.clone()), cap)
        }
        RingExpr::CongMat(k) => {
            if *k == 0 {
                return Err(Error::Construction("CongMat needs k >= 1".into()));
            }
            tabulate(&CongruenceMatrices { modulus: 2 * k, k: *k }, cap)
        }
        RingExpr::Corner(e, name) => {
            let base = build_with(e, limits)?;
            let idem = base.element_by_name(name)?;
            corner(&base, idem)
        }
        RingExpr::Quot(e, gens) => {
            let base = build_with(e, limits)?;
            let gens = gens
                .iter()
                .map(|g| base.element_by_name(g))
                .collect::<Result<Vec<_>>>()?;
            let ideal = base.ideal_closure(&gens, Side::TwoSided);
            quotient(&base, &ideal)
        }
        RingExpr::Table(path) => {
            let ring = table_file::load_table(path)?;
            check_cap(ring.order(), cap)?;
            Ok(ring)
        }
    }
}

/// Parses and builds in one step.
pub fn build_str(src: &str, limits: &Limits) -> Result<FiniteRing> {
    build_with(&RingExpr::parse(src)?, limits)
}

/// T(R,R): pairs `(r, m)` with `(r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2)`.
pub fn trivial_extension(base: &FiniteRing, cap: usize) -> Result<FiniteRing> {
    tabulate(&TrivialExtension { base }, cap)
}

/// D(R, Z_k); requires the characteristic of `base` to divide `k`, since
/// otherwise `Z_k` does not act on `base`.
pub fn dorroh_extension(base: &FiniteRing, k: usize, cap: usize) -> Result<FiniteRing> {
    let c = base.characteristic();
    if k == 0 || !k.is_multiple_of(c) {
        return Err(Error::Construction(format!(
            "Z_{k} does not act on a ring of characteristic {c}; k must be a multiple of {c}"
        )));
    }
    tabulate(&Dorroh { base, k }, cap)
}

/// R[x]/(x^n), `n >= 2`.
pub fn truncated_polynomials(base: &FiniteRing, n: usize, cap: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::Construction(format!("PolyNil needs n >= 2, got {n}")));
    }
    tabulate(&Polynomials::truncated(base, n), cap)
}

pub fn direct_product(a: &FiniteRing, b: &FiniteRing, cap: usize) -> Result<FiniteRing> {
    tabulate(&Product { a, b }, cap)
}

fn check_cap(order: usize, cap: usize) -> Result<()> {
    if order > cap {
        Err(Error::OrderCap { order, cap })
    } else {
        Ok(())
    }
}

fn checked_pow(base: usize, exp: usize) -> usize {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(usize::MAX)
}

fn integers_mod(n: usize, cap: usize) -> Result<FiniteRing> {
    check_cap(n, cap)?;
    if n < 2 {
        return Err(Error::Degenerate(format!("Z {n} has zero = one")));
    }
    let add = (0..n * n).map(|i| ((i / n + i % n) % n) as u16).collect();
    let mul = (0..n * n).map(|i| ((i / n) * (i % n) % n) as u16).collect();
    FiniteRing::from_flat(n, add, mul, 0, 1, (0..n).map(|i| i.to_string()).collect())
}

/// An explicit carrier: elements are coordinate vectors with an injective
/// index encoding.
trait Carrier: Sync {
    fn size(&self) -> usize;
    fn decode(&self, index: usize) -> Vec<usize>;
    fn encode(&self, coords: &[usize]) -> Option<usize>;
    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize>;
    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize>;
    fn zero(&self) -> Vec<usize>;
    fn one(&self) -> Vec<usize>;
    fn name(&self, coords: &[usize]) -> String;
    fn what(&self) -> &'static str;
}

fn tabulate(carrier: &dyn Carrier, cap: usize) -> Result<FiniteRing> {
    let n = carrier.size();
    check_cap(n, cap)?;
    let values: Vec<Vec<usize>> = (0..n).into_par_iter().map(|i| carrier.decode(i)).collect();
    let not_closed = || {
        Error::Construction(format!("{} carrier is not closed under its operations", carrier.what()))
    };
    let fill = |op: &(dyn Fn(&[usize], &[usize]) -> Vec<usize> + Sync)| -> Result<Vec<u16>> {
        let mut table = vec![0u16; n * n];
        table
            .par_chunks_mut(n)
            .enumerate()
            .try_for_each(|(i, row)| {
                for (j, slot) in row.iter_mut().enumerate() {
                    let v = op(&values[i], &values[j]);
                    *slot = carrier.encode(&v).ok_or(())? as u16;
                }
                Ok::<(), ()>(())
            })
            .map_err(|_| not_closed())?;
        Ok(table)
    };
    let add = fill(&|a, b| carrier.add(a, b))?;
    let mul = fill(&|a, b| carrier.mul(a, b))?;
    let zero = carrier.encode(&carrier.zero()).ok_or_else(not_closed)?;
    let one = carrier.encode(&carrier.one()).ok_or_else(not_closed)?;
    let names = values.iter().map(|v| carrier.name(v)).collect();
    FiniteRing::from_flat(n, add, mul, zero, one, names)
}

fn mixed_radix_encode(digits: impl Iterator<Item = (usize, usize)>) -> Option<usize> {
    let mut idx = 0usize;
    let mut scale = 1usize;
    for (d, radix) in digits {
        if d >= radix {
            return None;
        }
        idx += d * scale;
        scale *= radix;
    }
    Some(idx)
}

/// Wraps names that would be ambiguous inside a sum or product.
fn atom(name: &str) -> String {
    if name.contains(['+', '*']) {
        format!("({name})")
    } else {
        name.to_string()
    }
}

/// First symbol from `candidates` that does not occur in any base name.
fn fresh_symbol(base: &FiniteRing, candidates: &[&'static str]) -> &'static str {
    candidates
        .iter()
        .copied()
        .find(|s| base.names().iter().all(|n| !n.contains(s)))
        .unwrap_or(candidates[candidates.len() - 1])
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum MatrixShape {
    Full,
    Upper,
    EqualDiagonal,
}

struct MatrixCarrier<'a> {
    base: &'a FiniteRing,
    n: usize,
    shape: MatrixShape,
    /// Positions stored as digits; for equal diagonals (0,0) stands for
    /// the whole diagonal.
    free: Vec<(usize, usize)>,
}

impl<'a> MatrixCarrier<'a> {
    fn new(base: &'a FiniteRing, n: usize, shape: MatrixShape) -> Self {
        let mut free = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let keep = match shape {
                    MatrixShape::Full => true,
                    MatrixShape::Upper => i <= j,
                    MatrixShape::EqualDiagonal => i < j || (i == 0 && j == 0),
                };
                if keep {
                    free.push((i, j));
                }
            }
        }
        MatrixCarrier { base, n, shape, free }
    }

    fn e(&self, i: usize) -> Elem {
        Elem::new(i)
    }
}

impl Carrier for MatrixCarrier<'_> {
    fn size(&self) -> usize {
        if self.n == 0 {
            return 0;
        }
        checked_pow(self.base.order(), self.free.len())
    }

    fn decode(&self, mut index: usize) -> Vec<usize> {
        let q = self.base.order();
        let z = self.base.zero().index();
        let mut m = vec![z; self.n * self.n];
        for &(i, j) in &self.free {
            let d = index % q;
            index /= q;
            if self.shape == MatrixShape::EqualDiagonal && i == j {
                for k in 0..self.n {
                    m[k * self.n + k] = d;
                }
            } else {
                m[i * self.n + j] = d;
            }
        }
        m
    }

    fn encode(&self, m: &[usize]) -> Option<usize> {
        let n = self.n;
        let z = self.base.zero().index();
        for i in 0..n {
            for j in 0..n {
                let v = m[i * n + j];
                let ok = match self.shape {
                    MatrixShape::Full => true,
                    MatrixShape::Upper => i <= j || v == z,
                    MatrixShape::EqualDiagonal => (i < j) || (i > j && v == z) || (i == j && v == m[0]),
                };
                if !ok {
                    return None;
                }
            }
        }
        let q = self.base.order();
        mixed_radix_encode(self.free.iter().map(|&(i, j)| (m[i * n + j], q)))
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(self.e(x), self.e(y)).index())
            .collect()
    }

    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let n = self.n;
        let r = self.base;
        let mut out = vec![r.zero().index(); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    acc = r.add(acc, r.mul(self.e(a[i * n + k]), self.e(b[k * n + j])));
                }
                out[i * n + j] = acc.index();
            }
        }
        out
    }

    fn zero(&self) -> Vec<usize> {
        vec![self.base.zero().index(); self.n * self.n]
    }

    fn one(&self) -> Vec<usize> {
        let mut m = self.zero();
        for k in 0..self.n {
            m[k * self.n + k] = self.base.one().index();
        }
        m
    }

    fn name(&self, m: &[usize]) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                let cells: Vec<&str> = (0..self.n)
                    .map(|j| self.base.name(self.e(m[i * self.n + j])))
                    .collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }

    fn what(&self) -> &'static str {
        "matrix"
    }
}

struct TrivialExtension<'a> {
    base: &'a FiniteRing,
}

impl Carrier for TrivialExtension<'_> {
    fn size(&self) -> usize {
        self.base.order().saturating_mul(self.base.order())
    }

    fn decode(&self, index: usize) -> Vec<usize> {
        let q = self.base.order();
        vec![index % q, index / q]
    }

    fn encode(&self, c: &[usize]) -> Option<usize> {
        let q = self.base.order();
        mixed_radix_encode([(c[0], q), (c[1], q)].into_iter())
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let r = self.base;
        vec![
            r.add(Elem::new(a[0]), Elem::new(b[0])).index(),
            r.add(Elem::new(a[1]), Elem::new(b[1])).index(),
        ]
    }

    /// (r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 r2)
    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let r = self.base;
        let (r1, m1, r2, m2) = (Elem::new(a[0]), Elem::new(a[1]), Elem::new(b[0]), Elem::new(b[1]));
        vec![
            r.mul(r1, r2).index(),
            r.add(r.mul(r1, m2), r.mul(m1, r2)).index(),
        ]
    }

    fn zero(&self) -> Vec<usize> {
        vec![self.base.zero().index(); 2]
    }

    fn one(&self) -> Vec<usize> {
        vec![self.base.one().index(), self.base.zero().index()]
    }

    fn name(&self, c: &[usize]) -> String {
        format!("({},{})", self.base.name(Elem::new(c[0])), self.base.name(Elem::new(c[1])))
    }

    fn what(&self) -> &'static str {
        "trivial extension"
    }
}

struct Dorroh<'a> {
    base: &'a FiniteRing,
    k: usize,
}

impl Carrier for Dorroh<'_> {
    fn size(&self) -> usize {
        self.base.order().saturating_mul(self.k)
    }

    fn decode(&self, index: usize) -> Vec<usize> {
        let q = self.base.order();
        vec![index % q, index / q]
    }

    fn encode(&self, c: &[usize]) -> Option<usize> {
        mixed_radix_encode([(c[0], self.base.order()), (c[1], self.k)].into_iter())
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        vec![
            self.base.add(Elem::new(a[0]), Elem::new(b[0])).index(),
            (a[1] + b[1]) % self.k,
        ]
    }

    /// (r1, n1)(r2, n2) = (r1 r2 + n1 r2 + n2 r1, n1 n2)
    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let r = self.base;
        let (r1, r2) = (Elem::new(a[0]), Elem::new(b[0]));
        let s = r.add(r.mul(r1, r2), r.add(r.scale(a[1], r2), r.scale(b[1], r1)));
        vec![s.index(), (a[1] * b[1]) % self.k]
    }

    fn zero(&self) -> Vec<usize> {
        vec![self.base.zero().index(), 0]
    }

    fn one(&self) -> Vec<usize> {
        vec![self.base.zero().index(), 1 % self.k]
    }

    fn name(&self, c: &[usize]) -> String {
        format!("({},{})", self.base.name(Elem::new(c[0])), c[1])
    }

    fn what(&self) -> &'static str {
        "Dorroh extension"
    }
}

/// Polynomials of degree < len over `base`, multiplied modulo either x^len
/// or a monic polynomial.
struct Polynomials<'a> {
    base: &'a FiniteRing,
    len: usize,
    /// Lower coefficients of the monic modulus; `None` means x^len.
    modulus: Option<Vec<Elem>>,
    var: &'static str,
}

impl<'a> Polynomials<'a> {
    fn truncated(base: &'a FiniteRing, len: usize) -> Self {
        Polynomials {
            base,
            len,
            modulus: None,
            var: fresh_symbol(base, &["x", "y", "z", "t", "u", "v", "w"]),
        }
    }

    fn modulo(base: &'a FiniteRing, lower: Vec<Elem>) -> Self {
        Polynomials {
            base,
            len: lower.len(),
            modulus: Some(lower),
            var: fresh_symbol(base, &["x", "y", "z", "t", "u", "v", "w"]),
        }
    }
}

/// Names a coefficient vector as a sum of nonzero terms.
fn term_sum(base: &FiniteRing, coeffs: &[usize], monomial: impl Fn(usize) -> Option<String>) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != base.zero().index())
        .map(|(i, &c)| {
            let c = Elem::new(c);
            match monomial(i) {
                None => atom(base.name(c)),
                Some(m) if c == base.one() => m,
                Some(m) => format!("{}*{}", atom(base.name(c)), m),
            }
        })
        .collect();
    if terms.is_empty() {
        base.name(base.zero()).to_string()
    } else {
        terms.join("+")
    }
}

impl Carrier for Polynomials<'_> {
    fn size(&self) -> usize {
        if self.len == 0 {
            return 0;
        }
        checked_pow(self.base.order(), self.len)
    }

    fn decode(&self, mut index: usize) -> Vec<usize> {
        let q = self.base.order();
        (0..self.len)
            .map(|_| {
                let d = index % q;
                index /= q;
                d
            })
            .collect()
    }

    fn encode(&self, c: &[usize]) -> Option<usize> {
        let q = self.base.order();
        mixed_radix_encode(c.iter().map(|&d| (d, q)))
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(Elem::new(x), Elem::new(y)).index())
            .collect()
    }

    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let r = self.base;
        let n = self.len;
        let mut full = vec![r.zero(); 2 * n - 1];
        for i in 0..n {
            for j in 0..n {
                full[i + j] = r.add(full[i + j], r.mul(Elem::new(a[i]), Elem::new(b[j])));
            }
        }
        if let Some(lower) = &self.modulus {
            // x^n = -(c_0 + c_1 x + … + c_{n-1} x^{n-1})
            for k in (n..2 * n - 1).rev() {
                let t = full[k];
                full[k] = r.zero();
                for (i, &c) in lower.iter().enumerate() {
                    let pos = k - n + i;
                    full[pos] = r.sub(full[pos], r.mul(t, c));
                }
            }
        }
        full.truncate(n);
        full.into_iter().map(Elem::index).collect()
    }

    fn zero(&self) -> Vec<usize> {
        vec![self.base.zero().index(); self.len]
    }

    fn one(&self) -> Vec<usize> {
        let mut v = self.zero();
        v[0] = self.base.one().index();
        v
    }

    fn name(&self, c: &[usize]) -> String {
        term_sum(self.base, c, |i| match i {
            0 => None,
            1 => Some(self.var.to_string()),
            _ => Some(format!("{}^{i}", self.var)),
        })
    }

    fn what(&self) -> &'static str {
        "polynomial quotient"
    }
}

struct Product<'a> {
    a: &'a FiniteRing,
    b: &'a FiniteRing,
}

impl Carrier for Product<'_> {
    fn size(&self) -> usize {
        self.a.order().saturating_mul(self.b.order())
    }

    fn decode(&self, index: usize) -> Vec<usize> {
        vec![index % self.a.order(), index / self.a.order()]
    }

    fn encode(&self, c: &[usize]) -> Option<usize> {
        mixed_radix_encode([(c[0], self.a.order()), (c[1], self.b.order())].into_iter())
    }

    fn add(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        vec![
            self.a.add(Elem::new(x[0]), Elem::new(y[0])).index(),
            self.b.add(Elem::new(x[1]), Elem::new(y[1])).index(),
        ]
    }

    fn mul(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        vec![
            self.a.mul(Elem::new(x[0]), Elem::new(y[0])).index(),
            self.b.mul(Elem::new(x[1]), Elem::new(y[1])).index(),
        ]
    }

    fn zero(&self) -> Vec<usize> {
        vec![self.a.zero().index(), self.b.zero().index()]
    }

    fn one(&self) -> Vec<usize> {
        vec![self.a.one().index(), self.b.one().index()]
    }

    fn name(&self, c: &[usize]) -> String {
        format!("({},{})", self.a.name(Elem::new(c[0])), self.b.name(Elem::new(c[1])))
    }

    fn what(&self) -> &'static str {
        "product"
    }
}

struct GroupRing<'a> {
    base: &'a FiniteRing,
    dims: Vec<usize>,
    group_order: usize,
    symbol: &'static str,
}

impl<'a> GroupRing<'a> {
    fn new(base: &'a FiniteRing, dims: Vec<usize>) -> Self {
        let group_order = dims.iter().product();
        GroupRing {
            base,
            dims,
            group_order,
            symbol: fresh_symbol(base, &["g", "h", "s", "t"]),
        }
    }

    fn group_digits(&self, mut g: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&d| {
                let k = g % d;
                g /= d;
                k
            })
            .collect()
    }

    fn group_mul(&self, g: usize, h: usize) -> usize {
        let (a, b) = (self.group_digits(g), self.group_digits(h));
        mixed_radix_encode(
            a.iter()
                .zip(&b)
                .zip(&self.dims)
                .map(|((&x, &y), &d)| ((x + y) % d, d)),
        )
        .expect("digits reduced modulo their radix")
    }

    fn group_name(&self, g: usize) -> Option<String> {
        let digits = self.group_digits(g);
        let factors: Vec<String> = digits
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k != 0)
            .map(|(i, &k)| {
                let s = if self.dims.len() == 1 {
                    self.symbol.to_string()
                } else {
                    format!("{}{}", self.symbol, i + 1)
                };
                if k == 1 {
                    s
                } else {
                    format!("{s}^{k}")
                }
            })
            .collect();
        if factors.is_empty() {
            None
        } else {
            Some(factors.join("*"))
        }
    }
}

impl Carrier for GroupRing<'_> {
    fn size(&self) -> usize {
        checked_pow(self.base.order(), self.group_order)
    }

    fn decode(&self, mut index: usize) -> Vec<usize> {
        let q = self.base.order();
        (0..self.group_order)
            .map(|_| {
                let d = index % q;
                index /= q;
                d
            })
            .collect()
    }

    fn encode(&self, c: &[usize]) -> Option<usize> {
        let q = self.base.order();
        mixed_radix_encode(c.iter().map(|&d| (d, q)))
    }

    fn add(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(Elem::new(x), Elem::new(y)).index())
            .collect()
    }

    fn mul(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let r = self.base;
        let mut out = vec![r.zero(); self.group_order];
        for g in 0..self.group_order {
            for h in 0..self.group_order {
                let gh = self.group_mul(g, h);
                out[gh] = r.add(out[gh], r.mul(Elem::new(a[g]), Elem::new(b[h])));
            }
        }
        out.into_iter().map(Elem::index).collect()
    }

    fn zero(&self) -> Vec<usize> {
        vec![self.base.zero().index(); self.group_order]
    }

    fn one(&self) -> Vec<usize> {
        let mut v = self.zero();
        v[0] = self.base.one().index();
        v
    }

    fn name(&self, c: &[usize]) -> String {
        term_sum(self.base, c, |g| self.group_name(g))
    }

    fn what(&self) -> &'static str {
        "group ring"
    }
}

/// 2×2 matrices [[a,b],[c,d]] over Z_{2k} with a ≡ d and b ≡ c ≡ 0 mod 2.
struct CongruenceMatrices {
    modulus: usize,
    k: usize,
}

impl Carrier for CongruenceMatrices {
    fn size(&self) -> usize {
        self.modulus.saturating_mul(checked_pow(self.k, 3))
    }

    fn decode(&self, index: usize) -> Vec<usize> {
        let a = index % self.modulus;
        let mut rest = index / self.modulus;
        let mut next = || {
            let v = rest % self.k;
            rest /= self.k;
            v
        };
        let t = next();
        let u = next();
        let v = next();
        vec![a, 2 * u, 2 * v, a % 2 + 2 * t]
    }

    fn encode(&self, m: &[usize]) -> Option<usize> {
        let [a, b, c, d] = [m[0], m[1], m[2], m[3]];
        if b % 2 != 0 || c % 2 != 0 || (a + d) % 2 != 0 {
            return None;
        }
        mixed_radix_encode(
            [(a, self.modulus), (d / 2, self.k), (b / 2, self.k), (c / 2, self.k)].into_iter(),
        )
    }

    fn add(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        x.iter().zip(y).map(|(a, b)| (a + b) % self.modulus).collect()
    }

    fn mul(&self, x: &[usize], y: &[usize]) -> Vec<usize> {
        let m = self.modulus;
        vec![
            (x[0] * y[0] + x[1] * y[2]) % m,
            (x[0] * y[1] + x[1] * y[3]) % m,
            (x[2] * y[0] + x[3] * y[2]) % m,
            (x[2] * y[1] + x[3] * y[3]) % m,
        ]
    }

    fn zero(&self) -> Vec<usize> {
        vec![0; 4]
    }

    fn one(&self) -> Vec<usize> {
        vec![1 % self.modulus, 0, 0, 1 % self.modulus]
    }

    fn name(&self, m: &[usize]) -> String {
        format!("[[{},{}],[{},{}]]", m[0], m[1], m[2], m[3])
    }

    fn what(&self) -> &'static str {
        "congruence matrix"
    }
}

/// Restricts `ring` to the sorted member list and validates the result
/// with `one` as identity.
fn restrict(ring: &FiniteRing, members: &[Elem], one: Elem) -> Result<FiniteRing> {
    let n = members.len();
    let mut position = vec![u16::MAX; ring.order()];
    for (i, &m) in members.iter().enumerate() {
        position[m.index()] = i as u16;
    }
    let lookup = |e: Elem| -> Result<u16> {
        match position[e.index()] {
            u16::MAX => Err(Error::Construction("subset is not closed".into())),
            p => Ok(p),
        }
    };
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in members {
        for &b in members {
            add.push(lookup(ring.add(a, b))?);
            mul.push(lookup(ring.mul(a, b))?);
        }
    }
    let names = members.iter().map(|&m| ring.name(m).to_string()).collect();
    FiniteRing::from_flat(
        n,
        add,
        mul,
        lookup(ring.zero())? as usize,
        lookup(one)? as usize,
        names,
    )
}

/// The corner ring eRe = eR for a central idempotent e, with identity e.
pub fn corner(ring: &FiniteRing, e: Elem) -> Result<FiniteRing> {
    if ring.mul(e, e) != e {
        return Err(Error::Construction(format!("{} is not idempotent", ring.name(e))));
    }
    if !ring.is_central(e) {
        return Err(Error::Construction(format!("{} is not central", ring.name(e))));
    }
    let members = ring.right_multiples(e).to_vec();
    restrict(ring, &members, e)
}

/// R/I for a two-sided ideal I. Each coset is represented by its
/// lowest-index member and keeps that member's name.
pub fn quotient(ring: &FiniteRing, ideal: &crate::ring::Subset) -> Result<FiniteRing> {
    if !ring.is_ideal(ideal, Side::TwoSided) {
        return Err(Error::NotIdeal("two-sided"));
    }
    if ideal.contains(ring.one()) {
        return Err(Error::Degenerate("quotient by the whole ring".into()));
    }
    let members = ideal.to_vec();
    let mut coset = vec![usize::MAX; ring.order()];
    let mut reps: Vec<Elem> = Vec::new();
    for x in ring.elements() {
        if coset[x.index()] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &i in &members {
            coset[ring.add(x, i).index()] = id;
        }
    }
    let n = reps.len();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for &a in &reps {
        for &b in &reps {
            add.push(coset[ring.add(a, b).index()] as u16);
            mul.push(coset[ring.mul(a, b).index()] as u16);
        }
    }
    let names = reps.iter().map(|&r| ring.name(r).to_string()).collect();
    FiniteRing::from_flat(
        n,
        add,
        mul,
        coset[ring.zero().index()],
        coset[ring.one().index()],
        names,
    )
}
