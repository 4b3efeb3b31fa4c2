use num_traits::Zero;

use super::Rational;

/// Solves `cols * y = rhs` for `y`, where `cols[j]` is the j-th column.
/// Returns `None` when the system is inconsistent. Free variables are set to zero.
pub fn solve_rational(cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let n = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = &f * &m[r][j];
                    m[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut y = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        y[c] = m[i][n].clone();
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn two_by_two() {
        let cols = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let y = solve_rational(&cols, &[rat(3), rat(1)]).unwrap();
        assert_eq!(y, vec![rat(2), rat(1)]);
    }

    #[test]
    fn inconsistent() {
        let cols = vec![vec![rat(1), rat(2)]];
        assert!(solve_rational(&cols, &[rat(1), rat(1)]).is_none());
    }
}
