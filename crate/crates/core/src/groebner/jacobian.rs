use crate::algebra::{AlgebraError, Field, Matrix, Polynomial};

/// Matrix of partial derivatives `d g_i / d x_j` evaluated at `point`.
pub fn jacobian_matrix_at<F: Field>(gens: &[Polynomial<F>], point: &[F]) -> Result<Matrix<F>, AlgebraError> {
    let Some(first) = gens.first() else {
        return Ok(Matrix::from_rows(Vec::new(), point.len()));
    };
    let n = first.nvars();
    if point.len() != n {
        return Err(AlgebraError::LengthMismatch { expected: n, found: point.len() });
    }
    let mut rows = Vec::with_capacity(gens.len());
    for g in gens {
        let row = (0..n).map(|j| g.partial_derivative(j).eval(point)).collect::<Result<Vec<F>, _>>()?;
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows, n))
}

/// Rank of the Jacobian matrix of `gens` at `point`, by exact elimination.
pub fn jacobian_rank_at<F: Field>(gens: &[Polynomial<F>], point: &[F]) -> Result<usize, AlgebraError> {
    Ok(jacobian_matrix_at(gens, point)?.rank())
}
