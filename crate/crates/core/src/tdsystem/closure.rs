use alloc::vec::Vec;

use crate::polykit::{Echelon, Matrix};
use crate::scalars::Field;

/// Smallest subspace containing `seeds` and invariant under every operator,
/// as a reduced echelon basis. Each newly added vector is pushed through
/// every operator until nothing new appears.
pub fn submodule_closure<F: Field>(
    f: &F,
    ops: &[&Matrix<F::Elem>],
    seeds: &[Vec<F::Elem>],
) -> Echelon<F::Elem> {
    let n = ops.first().map_or_else(|| seeds.first().map_or(0, Vec::len), |m| m.rows());
    let mut span = Echelon::new(n);
    let mut queue: Vec<Vec<F::Elem>> = Vec::new();
    for s in seeds {
        if span.insert(f, s.clone()) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for m in ops {
            let w = m.apply(f, &v);
            if span.insert(f, w.clone()) {
                queue.push(w);
            }
        }
    }
    span
}

/// Matrix of `m` restricted to the span of `sub`, in the coordinates of
/// its echelon basis. `None` if the span is not `m`-invariant.
pub fn restrict<F: Field>(
    f: &F,
    m: &Matrix<F::Elem>,
    sub: &Echelon<F::Elem>,
) -> Option<Matrix<F::Elem>> {
    let mut cols = Vec::with_capacity(sub.rank());
    for b in sub.basis() {
        let img = m.apply(f, b);
        if !sub.contains(f, &img) {
            return None;
        }
        cols.push(sub.coordinates(&img));
    }
    Some(Matrix::from_columns(sub.rank(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RationalField;

    #[test]
    fn diagonal_operators_fix_coordinate_lines() {
        let q = RationalField::default();
        let d = Matrix::from_fn(3, 3, |r, c| if r == c { q.from_i64(r as i64 + 1) } else { q.zero() });
        let seed = alloc::vec![q.one(), q.zero(), q.zero()];
        let span = submodule_closure(&q, &[&d, &d], &[seed]);
        assert_eq!(span.rank(), 1);
        let again = submodule_closure(&q, &[&d, &d], span.basis());
        assert_eq!(again, span);
        assert_eq!(restrict(&q, &d, &span).unwrap(), Matrix::from_rows(alloc::vec![alloc::vec![q.one()]]));
    }

    #[test]
    fn shift_generates_everything() {
        let q = RationalField::default();
        // Lower shift: e_k -> e_{k+1}.
        let s = Matrix::from_fn(4, 4, |r, c| if r == c + 1 { q.one() } else { q.zero() });
        let mut seed = alloc::vec![q.zero(); 4];
        seed[0] = q.one();
        assert_eq!(submodule_closure(&q, &[&s], &[seed]).rank(), 4);
        let mut tail = alloc::vec![q.zero(); 4];
        tail[2] = q.one();
        let span = submodule_closure(&q, &[&s], &[tail]);
        assert_eq!(span.rank(), 2);
        assert!(restrict(&q, &s.transpose(), &span).is_none());
    }
}
