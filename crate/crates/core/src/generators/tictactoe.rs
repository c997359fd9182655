use crate::arrangement::LineArrangement;
use crate::error::{Error, Result};
use crate::geometry::ProjLine;

/// Named lines of a tic-tac-toe arrangement.
pub struct TicTacToe;

impl TicTacToe {
    /// `v_i: x = i z`
    pub fn vertical(i: i64) -> ProjLine {
        ProjLine::rational(1, 0, -i).expect("nonzero")
    }

    /// `h_i: y = i z`
    pub fn horizontal(i: i64) -> ProjLine {
        ProjLine::rational(0, 1, -i).expect("nonzero")
    }

    /// `d_i: x - y + i z = 0`
    pub fn diagonal(i: i64) -> ProjLine {
        ProjLine::rational(1, -1, i).expect("nonzero")
    }

    /// `e_i: x + y + i z = 0`
    pub fn antidiagonal(i: i64) -> ProjLine {
        ProjLine::rational(1, 1, i).expect("nonzero")
    }

    pub fn infinity() -> ProjLine {
        ProjLine::rational(0, 0, 1).expect("nonzero")
    }

    /// The four lines added to pass from `(k, j)` to `(k, j+1)`.
    pub fn next_diagonals(j: usize) -> [ProjLine; 4] {
        let s = j as i64 + 1;
        [
            Self::diagonal(s),
            Self::diagonal(-s),
            Self::antidiagonal(s),
            Self::antidiagonal(-s),
        ]
    }
}

/// `T_k^j`: verticals and horizontals for `|i| <= k`, diagonals and antidiagonals
/// for `|i| <= j`, plus the line at infinity when `complete`.
pub fn tictactoe(k: usize, j: usize, complete: bool) -> Result<LineArrangement> {
    if j > k {
        return Err(Error::InvalidFamily("tic-tac-toe needs k >= j".into()));
    }
    let (k, j) = (k as i64, j as i64);
    let mut lines = Vec::new();
    lines.extend((-k..=k).map(TicTacToe::vertical));
    lines.extend((-k..=k).map(TicTacToe::horizontal));
    lines.extend((-j..=j).map(TicTacToe::diagonal));
    lines.extend((-j..=j).map(TicTacToe::antidiagonal));
    if complete {
        lines.push(TicTacToe::infinity());
    }
    let label = if complete {
        format!("Tbar({k},{j})")
    } else {
        format!("T({k},{j})")
    };
    Ok(LineArrangement::new(lines)?.with_label(label))
}
