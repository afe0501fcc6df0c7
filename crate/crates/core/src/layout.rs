//! Register allocation for the counting circuits.
//!
//! Index order is fixed: the `x` register first (`x_d` at qubit `d - 1`),
//! then `aux`, then the `r` quads, the `s` pairs, and finally the
//! triangular `z` rows in row-major order (`z_{1,0}, z_{1,1}, z_{2,0}, …`).
//!
//! Predicate applications are numbered `1..=m(m+1)/2`: application 1 is the
//! first-edge block, the rest follow the counting cascade order. The
//! faithful layout gives each application its own `r`/`s` ancillas; the
//! compact layout shares one set across all applications.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayoutMode {
    Faithful,
    #[default]
    Compact,
}

impl fmt::Display for LayoutMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LayoutMode::Faithful => "faithful",
            LayoutMode::Compact => "compact",
        })
    }
}

impl FromStr for LayoutMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "faithful" => Ok(LayoutMode::Faithful),
            "compact" => Ok(LayoutMode::Compact),
            other => Err(format!("unknown layout mode {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("predicate application {app} not assigned (valid range 1..={max})")]
    Application { app: usize, max: usize },
    #[error("z_{{{row},{level}}} not assigned for m = {m}")]
    Counter { row: usize, level: usize, m: usize },
    #[error("vertex {vertex} not assigned for n = {n}")]
    Vertex { vertex: usize, n: usize },
}

/// Number of predicate applications in one counting block, `m(m+1)/2`.
pub fn application_count(m: usize) -> usize {
    m * (m + 1) / 2
}

/// Number of counter qubits, `m(m+3)/2`.
pub fn counter_qubits(m: usize) -> usize {
    m * (m + 3) / 2
}

/// Closed form for the faithful layout: `n + 1 + 3m(m+1) + m(m+3)/2`.
pub fn faithful_qubits(n: usize, m: usize) -> usize {
    n + 1 + 3 * m * (m + 1) + counter_qubits(m)
}

/// Closed form for the compact layout: `n + 7 + m(m+3)/2`.
pub fn compact_qubits(n: usize, m: usize) -> usize {
    n + 7 + counter_qubits(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QubitLayout {
    mode: LayoutMode,
    n: usize,
    m: usize,
    x: Vec<usize>,
    aux: usize,
    r: Vec<[usize; 4]>,
    s: Vec<[usize; 2]>,
    /// `z[i - 1][j]` is `z_{i,j}`.
    z: Vec<Vec<usize>>,
    total: usize,
}

impl QubitLayout {
    pub fn new(mode: LayoutMode, n: usize, m: usize) -> Self {
        assert!(n >= 1 && m >= 1, "layouts need n >= 1 and m >= 1");
        let mut next = 0usize;
        let mut take = || {
            let q = next;
            next += 1;
            q
        };
        let x: Vec<usize> = (0..n).map(|_| take()).collect();
        let aux = take();
        let sets = match mode {
            LayoutMode::Faithful => application_count(m),
            LayoutMode::Compact => 1,
        };
        let r: Vec<[usize; 4]> = (0..sets)
            .map(|_| [take(), take(), take(), take()])
            .collect();
        let s: Vec<[usize; 2]> = (0..sets).map(|_| [take(), take()]).collect();
        let z: Vec<Vec<usize>> = (1..=m).map(|i| (0..=i).map(|_| take()).collect()).collect();
        Self {
            mode,
            n,
            m,
            x,
            aux,
            r,
            s,
            z,
            total: next,
        }
    }

    pub fn faithful(n: usize, m: usize) -> Self {
        Self::new(LayoutMode::Faithful, n, m)
    }

    pub fn compact(n: usize, m: usize) -> Self {
        Self::new(LayoutMode::Compact, n, m)
    }

    pub fn mode(&self) -> LayoutMode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn total_qubits(&self) -> usize {
        self.total
    }

    /// Qubit holding `x_d`, `d` 1-indexed.
    pub fn x(&self, vertex: usize) -> Result<usize, LayoutError> {
        vertex
            .checked_sub(1)
            .and_then(|i| self.x.get(i))
            .copied()
            .ok_or(LayoutError::Vertex { vertex, n: self.n })
    }

    pub fn x_qubits(&self) -> &[usize] {
        &self.x
    }

    pub fn aux(&self) -> usize {
        self.aux
    }

    fn slot(&self, app: usize) -> Result<usize, LayoutError> {
        let max = application_count(self.m);
        if app == 0 || app > max {
            return Err(LayoutError::Application { app, max });
        }
        Ok(match self.mode {
            LayoutMode::Faithful => app - 1,
            LayoutMode::Compact => 0,
        })
    }

    /// `r_{app,1..4}`.
    pub fn r(&self, app: usize) -> Result<[usize; 4], LayoutError> {
        Ok(self.r[self.slot(app)?])
    }

    /// `s_{app,1..2}`.
    pub fn s(&self, app: usize) -> Result<[usize; 2], LayoutError> {
        Ok(self.s[self.slot(app)?])
    }

    /// `z_{row,level}` for `1 <= row <= m`, `0 <= level <= row`.
    pub fn z(&self, row: usize, level: usize) -> Result<usize, LayoutError> {
        row.checked_sub(1)
            .and_then(|i| self.z.get(i))
            .and_then(|r| r.get(level))
            .copied()
            .ok_or(LayoutError::Counter {
                row,
                level,
                m: self.m,
            })
    }

    /// Row `z_{row,0..=row}`.
    pub fn z_row(&self, row: usize) -> Result<&[usize], LayoutError> {
        row.checked_sub(1)
            .and_then(|i| self.z.get(i))
            .map(Vec::as_slice)
            .ok_or(LayoutError::Counter {
                row,
                level: 0,
                m: self.m,
            })
    }

    pub fn all_r(&self) -> impl Iterator<Item = usize> + '_ {
        self.r.iter().flatten().copied()
    }

    pub fn all_s(&self) -> impl Iterator<Item = usize> + '_ {
        self.s.iter().flatten().copied()
    }

    pub fn all_z(&self) -> impl Iterator<Item = usize> + '_ {
        self.z.iter().flatten().copied()
    }

    /// Qubits that start in |1⟩: `aux` and every `s`.
    pub fn initially_set(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.aux).chain(self.all_s())
    }
}
