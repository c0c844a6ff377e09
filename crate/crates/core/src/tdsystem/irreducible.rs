use alloc::vec::Vec;

use super::closure::submodule_closure;
use crate::polykit::{Echelon, Matrix};
use crate::scalars::Field;

/// Largest dimension for which the generated algebra is spanned explicitly.
pub const BURNSIDE_MAX_DIM: usize = 16;

/// Dimension of the algebra generated by `a` and `astar`: the span of all
/// words in the two operators, including the empty word.
pub fn burnside_span_dim<F: Field>(f: &F, a: &Matrix<F::Elem>, astar: &Matrix<F::Elem>) -> usize {
    let n = a.rows();
    let flat = |m: &Matrix<F::Elem>| -> Vec<F::Elem> {
        (0..n).flat_map(|r| m.row(r).iter().cloned()).collect()
    };
    let mut span = Echelon::new(n * n);
    let id = Matrix::identity(f, n);
    span.insert(f, flat(&id));
    let mut queue = Vec::from([id]);
    while let Some(w) = queue.pop() {
        if span.rank() == n * n {
            break;
        }
        for g in [a, astar] {
            let next = g.mul(f, &w);
            if span.insert(f, flat(&next)) {
                queue.push(next);
            }
        }
    }
    span.rank()
}

/// Whether `a`, `astar` generate the full matrix algebra. Span dimension
/// does not change under field extension, so this decides absolute
/// irreducibility. A zero-dimensional space is not irreducible.
pub fn irreducibility_check<F: Field>(f: &F, a: &Matrix<F::Elem>, astar: &Matrix<F::Elem>) -> bool {
    let n = a.rows();
    n > 0 && burnside_span_dim(f, a, astar) == n * n
}

/// Irreducibility test for a module whose `θ*_0`-eigenspace is a line.
///
/// With `v` spanning that line and `ψ` a nonzero row of `e0star`, the
/// module is irreducible iff `v` generates it and `ψ` generates the dual
/// under the transposes. A nonzero submodule `U` on which `ψ` vanished
/// would have an invariant annihilator containing `ψ`. Otherwise
/// `e0star U` is a nonzero multiple of `v`, so `U` contains `v`.
pub fn sharp_cyclic_irreducible<F: Field>(
    f: &F,
    a: &Matrix<F::Elem>,
    astar: &Matrix<F::Elem>,
    e0star: &Matrix<F::Elem>,
) -> Option<bool> {
    let n = a.rows();
    if n == 0 || e0star.rank(f) != 1 {
        return None;
    }
    let v = (0..n).map(|c| e0star.column(c)).find(|c| c.iter().any(|x| !f.is_zero(x)))?;
    let psi = (0..n).map(|r| e0star.row(r).to_vec()).find(|r| r.iter().any(|x| !f.is_zero(x)))?;
    let forward = submodule_closure(f, &[a, astar], &[v]).rank();
    let (at, ast) = (a.transpose(), astar.transpose());
    let backward = submodule_closure(f, &[&at, &ast], &[psi]).rank();
    Some(forward == n && backward == n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{PrimeField, DEFAULT_PRIME};

    #[test]
    fn diagonal_pair_is_reducible() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let d = Matrix::from_fn(2, 2, |r, c| if r == c { f.from_i64(r as i64 + 3) } else { f.zero() });
        assert_eq!(burnside_span_dim(&f, &d, &d), 2);
        assert!(!irreducibility_check(&f, &d, &d));
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let m = Matrix::from_rows(alloc::vec![alloc::vec![f.from_i64(5)]]);
        assert!(irreducibility_check(&f, &m, &m));
    }

    #[test]
    fn random_three_dimensional_pair() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        let mut s = crate::scalars::Sampler::new(&f, 3);
        let a = Matrix::from_fn(3, 3, |_, _| s.sample());
        let b = Matrix::from_fn(3, 3, |_, _| s.sample());
        assert_eq!(burnside_span_dim(&f, &a, &b), 9);
    }

    #[test]
    fn upper_triangular_pair_is_reducible() {
        let f = PrimeField::new(101).unwrap();
        let a = Matrix::from_rows(alloc::vec![
            alloc::vec![f.from_i64(1), f.from_i64(1)],
            alloc::vec![f.zero(), f.from_i64(2)],
        ]);
        let b = Matrix::from_rows(alloc::vec![
            alloc::vec![f.from_i64(3), f.zero()],
            alloc::vec![f.zero(), f.from_i64(4)],
        ]);
        // The first coordinate line is invariant under both.
        assert_eq!(burnside_span_dim(&f, &a, &b), 3);
        let e0 = Matrix::from_rows(alloc::vec![alloc::vec![f.one(), f.zero()], alloc::vec![f.zero(), f.zero()]]);
        assert_eq!(sharp_cyclic_irreducible(&f, &a, &b, &e0), Some(false));
    }
}
