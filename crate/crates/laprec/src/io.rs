//! JSON file formats: graphs, signals, partial samples, snapshot plans,
//! sparse spectra, complexes, chains and recovery results.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSignal, Vertex};
use crate::multi::SnapshotPlan;
use crate::prony::RecoveryResult;
use crate::simplicial::{Face, SimplicialComplex};
use crate::spectral::SparseSpectralSignal;

/// `{"n": int, "edges": [[u, v], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        Self {
            n: g.vertex_count(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    pub fn into_graph(&self) -> Result<Graph> {
        let edges: Vec<(Vertex, Vertex)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Graph::new(self.n, &edges)
    }
}

/// `{"values": [float, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignalJson {
    pub values: Vec<f64>,
}

impl SignalJson {
    pub fn from_signal(f: &GraphSignal) -> Self {
        Self {
            values: f.values().to_vec(),
        }
    }

    pub fn into_signal(&self, g: &Graph) -> Result<GraphSignal> {
        GraphSignal::new(g, self.values.clone())
    }
}

/// One entry of a partial sample list: `{"vertex": int, "value": float}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexSample {
    pub vertex: Vertex,
    pub value: f64,
}

pub fn samples_to_json(samples: &BTreeMap<Vertex, f64>) -> Vec<VertexSample> {
    samples
        .iter()
        .map(|(&vertex, &value)| VertexSample { vertex, value })
        .collect()
}

pub fn samples_from_json(list: &[VertexSample]) -> BTreeMap<Vertex, f64> {
    list.iter().map(|s| (s.vertex, s.value)).collect()
}

/// `{"anchors": [{"vertex": int, "radius": int}, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanJson {
    pub anchors: Vec<AnchorJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnchorJson {
    pub vertex: Vertex,
    pub radius: usize,
}

impl PlanJson {
    pub fn from_plan(plan: &SnapshotPlan) -> Self {
        Self {
            anchors: plan
                .anchors()
                .iter()
                .map(|&(vertex, radius)| AnchorJson { vertex, radius })
                .collect(),
        }
    }

    pub fn into_plan(&self) -> Result<SnapshotPlan> {
        SnapshotPlan::new(self.anchors.iter().map(|a| (a.vertex, a.radius)).collect())
    }
}

/// `{"support": [int, ...], "coefficients": [float, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SparseSignalJson {
    pub support: Vec<usize>,
    pub coefficients: Vec<f64>,
}

impl SparseSignalJson {
    pub fn from_signal(sig: &SparseSpectralSignal) -> Self {
        Self {
            support: sig.support().to_vec(),
            coefficients: sig.coefficients().to_vec(),
        }
    }

    pub fn into_signal(&self) -> Result<SparseSpectralSignal> {
        SparseSpectralSignal::new(self.support.clone(), self.coefficients.clone())
    }
}

/// `{"facets": [[int, ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexJson {
    pub facets: Vec<Vec<usize>>,
}

impl ComplexJson {
    pub fn into_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(&self.facets)
    }
}

/// `{"k": int, "faces": [[int, ...], ...], "values": [float, ...]}`
///
/// A full chain lists every k-face in the complex's canonical order; a
/// partial sample set lists just the sampled faces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainJson {
    pub k: usize,
    pub faces: Vec<Vec<usize>>,
    pub values: Vec<f64>,
}

impl ChainJson {
    pub fn into_face_samples(&self) -> Result<BTreeMap<Face, f64>> {
        if self.faces.len() != self.values.len() {
            return Err(Error::ChainLength {
                got: self.values.len(),
                expected: self.faces.len(),
                k: self.k,
            });
        }
        Ok(self
            .faces
            .iter()
            .cloned()
            .zip(self.values.iter().copied())
            .collect())
    }
}

/// `{"anchors": [{"face": [int, ...], "radius": int}, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacePlanJson {
    pub anchors: Vec<FaceAnchorJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceAnchorJson {
    pub face: Vec<usize>,
    pub radius: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagnosticsJson {
    pub hankel_singular_values: Vec<f64>,
    pub effective_sparsity: usize,
    pub max_imag_residue: f64,
    pub merged_roots: usize,
    pub component_residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexValue {
    pub vertex: Vertex,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphComponentJson {
    pub eigenvalue: f64,
    pub values: Vec<VertexValue>,
}

/// Recovery result on a graph, components keyed by vertex label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphRecoveryJson {
    pub eigenvalues: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_support: Option<Vec<Vec<usize>>>,
    pub components: Vec<GraphComponentJson>,
    pub diagnostics: DiagnosticsJson,
}

fn diagnostics_json(result: &RecoveryResult) -> DiagnosticsJson {
    DiagnosticsJson {
        hankel_singular_values: result.diagnostics.hankel_singular_values.clone(),
        effective_sparsity: result.diagnostics.effective_sparsity,
        max_imag_residue: result.diagnostics.max_imag_residue,
        merged_roots: result.diagnostics.merged_roots,
        component_residual: result.diagnostics.component_residual,
    }
}

impl GraphRecoveryJson {
    pub fn from_result(result: &RecoveryResult) -> Self {
        Self {
            eigenvalues: result.eigenvalues.clone(),
            matched_support: result.matched_support.as_ref().map(|m| m.clusters.clone()),
            components: result
                .components
                .iter()
                .map(|c| GraphComponentJson {
                    eigenvalue: c.eigenvalue,
                    values: c
                        .values
                        .iter()
                        .map(|(&vertex, &value)| VertexValue { vertex, value })
                        .collect(),
                })
                .collect(),
            diagnostics: diagnostics_json(result),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceValue {
    pub face: Vec<usize>,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceComponentJson {
    pub eigenvalue: f64,
    pub values: Vec<FaceValue>,
}

/// Recovery result on a complex, components keyed by face.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimplicialRecoveryJson {
    pub eigenvalues: Vec<f64>,
    pub components: Vec<FaceComponentJson>,
    pub diagnostics: DiagnosticsJson,
}

impl SimplicialRecoveryJson {
    pub fn from_result(result: &RecoveryResult, cx: &SimplicialComplex, k: usize) -> Self {
        Self {
            eigenvalues: result.eigenvalues.clone(),
            components: result
                .components
                .iter()
                .map(|c| FaceComponentJson {
                    eigenvalue: c.eigenvalue,
                    values: c
                        .values
                        .iter()
                        .map(|(&i, &value)| FaceValue {
                            face: cx.faces(k)[i].clone(),
                            value,
                        })
                        .collect(),
                })
                .collect(),
            diagnostics: diagnostics_json(result),
        }
    }
}

/// Machine-readable error payload for the CLI.
pub fn error_json(e: &Error) -> serde_json::Value {
    serde_json::json!({
        "error": {
            "kind": e.kind(),
            "message": e.to_string(),
            "exit_code": e.exit_code(),
        }
    })
}

pub fn load_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(value)?)?;
    Ok(())
}
