//! Gate-level circuit representation.
//!
//! Every admitted gate is an involution, so the inverse of a circuit is its
//! gate list reversed.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GateKind {
    H,
    X,
    #[serde(rename = "CNOT")]
    Cnot,
    #[serde(rename = "TOFFOLI")]
    Toffoli,
    #[serde(rename = "MCX")]
    Mcx,
    #[serde(rename = "MCZ")]
    Mcz,
}

impl GateKind {
    pub const ALL: [GateKind; 6] = [
        GateKind::H,
        GateKind::X,
        GateKind::Cnot,
        GateKind::Toffoli,
        GateKind::Mcx,
        GateKind::Mcz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "H",
            GateKind::X => "X",
            GateKind::Cnot => "CNOT",
            GateKind::Toffoli => "TOFFOLI",
            GateKind::Mcx => "MCX",
            GateKind::Mcz => "MCZ",
        }
    }

    fn accepts_controls(self, count: usize) -> bool {
        match self {
            GateKind::H | GateKind::X => count == 0,
            GateKind::Cnot => count == 1,
            GateKind::Toffoli => count == 2,
            GateKind::Mcx => count >= 1,
            // Zero controls is a bare Z, needed by the one-qubit diffusion.
            GateKind::Mcz => true,
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = CircuitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GateKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| CircuitError::Netlist(format!("unknown gate kind {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("{kind} cannot take {count} control(s)")]
    ControlArity { kind: GateKind, count: usize },
    #[error("qubit {qubit} used more than once in a {kind} gate")]
    Collision { kind: GateKind, qubit: usize },
    #[error("qubit {qubit} out of range for a {qubit_count}-qubit circuit")]
    OutOfRange { qubit: usize, qubit_count: usize },
    #[error("cannot combine circuits over {left} and {right} qubits")]
    WidthMismatch { left: usize, right: usize },
    #[error("netlist: {0}")]
    Netlist(String),
}

/// A single gate: `controls` must be distinct and exclude `target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    kind: GateKind,
    controls: Vec<usize>,
    target: usize,
}

impl Gate {
    pub fn new(kind: GateKind, controls: Vec<usize>, target: usize) -> Result<Self, CircuitError> {
        if !kind.accepts_controls(controls.len()) {
            return Err(CircuitError::ControlArity {
                kind,
                count: controls.len(),
            });
        }
        for (i, &c) in controls.iter().enumerate() {
            if c == target || controls[..i].contains(&c) {
                return Err(CircuitError::Collision { kind, qubit: c });
            }
        }
        Ok(Self {
            kind,
            controls,
            target,
        })
    }

    pub fn h(target: usize) -> Self {
        Self::unchecked(GateKind::H, vec![], target)
    }

    pub fn x(target: usize) -> Self {
        Self::unchecked(GateKind::X, vec![], target)
    }

    pub fn cnot(control: usize, target: usize) -> Result<Self, CircuitError> {
        Self::new(GateKind::Cnot, vec![control], target)
    }

    pub fn toffoli(c0: usize, c1: usize, target: usize) -> Result<Self, CircuitError> {
        Self::new(GateKind::Toffoli, vec![c0, c1], target)
    }

    pub fn mcx(controls: Vec<usize>, target: usize) -> Result<Self, CircuitError> {
        Self::new(GateKind::Mcx, controls, target)
    }

    pub fn mcz(controls: Vec<usize>, target: usize) -> Result<Self, CircuitError> {
        Self::new(GateKind::Mcz, controls, target)
    }

    fn unchecked(kind: GateKind, controls: Vec<usize>, target: usize) -> Self {
        Self {
            kind,
            controls,
            target,
        }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn controls(&self) -> &[usize] {
        &self.controls
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Largest qubit index touched.
    pub fn max_qubit(&self) -> usize {
        self.controls.iter().copied().fold(self.target, usize::max)
    }

    /// True for gates that flip the target conditioned on all controls.
    pub fn is_controlled_x(&self) -> bool {
        matches!(
            self.kind,
            GateKind::X | GateKind::Cnot | GateKind::Toffoli | GateKind::Mcx
        )
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        if !self.controls.is_empty() {
            let ctrls: Vec<String> = self.controls.iter().map(ToString::to_string).collect();
            write!(f, " {}", ctrls.join(","))?;
        }
        write!(f, " -> {}", self.target)
    }
}

impl FromStr for Gate {
    type Err = CircuitError;

    /// Parses one netlist line, `KIND [c0,c1,…] -> target`.
    fn from_str(line: &str) -> Result<Self, Self::Err> {
        let bad = |why: &str| CircuitError::Netlist(format!("{why}: {line:?}"));
        let (head, target) = line.split_once("->").ok_or_else(|| bad("missing '->'"))?;
        let target = target
            .trim()
            .parse::<usize>()
            .map_err(|_| bad("bad target"))?;
        let mut head = head.split_whitespace();
        let kind: GateKind = head.next().ok_or_else(|| bad("missing kind"))?.parse()?;
        let controls = match head.next() {
            None => vec![],
            Some(list) => list
                .split(',')
                .map(|c| c.trim().parse::<usize>().map_err(|_| bad("bad control")))
                .collect::<Result<_, _>>()?,
        };
        if head.next().is_some() {
            return Err(bad("trailing tokens"));
        }
        Gate::new(kind, controls, target)
    }
}

/// An ordered gate list over `qubit_count` qubits.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Circuit {
    qubit_count: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(qubit_count: usize) -> Self {
        Self {
            qubit_count,
            gates: Vec::new(),
        }
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: Gate) -> Result<(), CircuitError> {
        let qubit = gate.max_qubit();
        if qubit >= self.qubit_count {
            return Err(CircuitError::OutOfRange {
                qubit,
                qubit_count: self.qubit_count,
            });
        }
        self.gates.push(gate);
        Ok(())
    }

    /// Builder form of [`Circuit::push`].
    pub fn append(mut self, gate: Gate) -> Result<Self, CircuitError> {
        self.push(gate)?;
        Ok(self)
    }

    pub fn extend_from(&mut self, other: &Circuit) -> Result<(), CircuitError> {
        if other.qubit_count != self.qubit_count {
            return Err(CircuitError::WidthMismatch {
                left: self.qubit_count,
                right: other.qubit_count,
            });
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn inverse(&self) -> Circuit {
        Circuit {
            qubit_count: self.qubit_count,
            gates: self.gates.iter().rev().cloned().collect(),
        }
    }

    pub fn contains_hadamard(&self) -> bool {
        self.gates.iter().any(|g| g.kind == GateKind::H)
    }

    pub fn resource_stats(&self) -> ResourceStats {
        let mut by_kind: BTreeMap<GateKind, usize> =
            GateKind::ALL.into_iter().map(|k| (k, 0)).collect();
        for g in &self.gates {
            *by_kind.entry(g.kind).or_default() += 1;
        }
        ResourceStats {
            gate_count_by_kind: by_kind,
            total_gates: self.gates.len(),
            qubit_count: self.qubit_count,
        }
    }

    /// One gate per line in application order.
    pub fn to_netlist(&self) -> String {
        let mut out = format!("QUBITS {}\n", self.qubit_count);
        for g in &self.gates {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_netlist(text: &str) -> Result<Self, CircuitError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| CircuitError::Netlist("empty netlist".into()))?;
        let qubit_count = header
            .strip_prefix("QUBITS ")
            .and_then(|n| n.trim().parse().ok())
            .ok_or_else(|| CircuitError::Netlist(format!("bad header {header:?}")))?;
        let mut circuit = Circuit::new(qubit_count);
        for line in lines {
            circuit.push(line.parse()?)?;
        }
        Ok(circuit)
    }
}

/// Gate totals for a circuit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ResourceStats {
    pub gate_count_by_kind: BTreeMap<GateKind, usize>,
    pub total_gates: usize,
    pub qubit_count: usize,
}

impl ResourceStats {
    pub fn count(&self, kind: GateKind) -> usize {
        self.gate_count_by_kind.get(&kind).copied().unwrap_or(0)
    }
}
