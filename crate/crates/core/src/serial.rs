//! Plain-data forms of algebras, tensors and certificates, with scalars as strings.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::builders::{raw_structure, RawStructure};
use crate::hopf::{HopfAlgebra, HopfMorphism, QuotientData, Tensor};
use crate::kernel::{Field, FieldSpec, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::splitting::{reassemble, CertificateParts, SplitCertificate, SplitPath};

pub fn hopf_to_raw(h: &HopfAlgebra) -> RawStructure {
    let s = |c: &Scalar| c.to_string();
    RawStructure {
        name: Some(h.name().to_string()),
        dim: h.dim(),
        mul: h.algebra().mul_tensor().iter().map(|(i, j, k, c)| (i, j, k, s(c))).collect(),
        unit: h.unit().iter().map(s).collect(),
        comul: h.comul_tensor().iter().map(|(i, j, k, c)| (i, j, k, s(c))).collect(),
        counit: h.counit().iter().map(s).collect(),
        antipode: h.antipode_opt().map(|m| {
            let mut out = Vec::new();
            for i in 0..m.cols() {
                for j in 0..m.rows() {
                    let c = m.get(j, i);
                    if !h.field().is_zero(c) {
                        out.push((i, j, s(c)));
                    }
                }
            }
            out
        }),
    }
}

pub fn hopf_from_raw(field: &Field, raw: &RawStructure) -> Result<HopfAlgebra> {
    raw_structure(field, raw)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixData {
    pub rows: usize,
    pub cols: usize,
    /// `[row, col, "c"]` for nonzero entries, row-major.
    pub entries: Vec<(usize, usize, String)>,
}

impl MatrixData {
    pub fn from_matrix(m: &Matrix) -> MatrixData {
        let mut entries = Vec::new();
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                if !m.field().is_zero(m.get(r, c)) {
                    entries.push((r, c, m.get(r, c).to_string()));
                }
            }
        }
        MatrixData {
            rows: m.rows(),
            cols: m.cols(),
            entries,
        }
    }

    pub fn to_matrix(&self, field: &Field) -> Result<Matrix> {
        let mut m = Matrix::zeros(field, self.rows, self.cols);
        for (r, c, v) in &self.entries {
            if *r >= self.rows || *c >= self.cols {
                return Err(Error::Parse(format!("matrix entry ({r}, {c}) out of range")));
            }
            m.set(*r, *c, field.parse(v)?);
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorData {
    pub dims: Vec<usize>,
    /// `[flat_index, "c"]`, index in row-major leg order.
    pub terms: Vec<(usize, String)>,
}

impl TensorData {
    pub fn from_tensor(t: &Tensor) -> TensorData {
        TensorData {
            dims: t.dims().to_vec(),
            terms: t.terms().map(|(i, c)| (i, c.to_string())).collect(),
        }
    }

    pub fn to_tensor(&self, field: &Field) -> Result<Tensor> {
        let size: usize = self.dims.iter().product();
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| {
                if *i >= size {
                    return Err(Error::Parse(format!("tensor index {i} out of range")));
                }
                Ok((*i, field.parse(c)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tensor::from_terms(field, &self.dims, terms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceData {
    pub ambient: usize,
    /// Rows of the reduced echelon basis.
    pub basis: Vec<Vec<String>>,
}

impl SubspaceData {
    pub fn from_subspace(s: &Subspace) -> SubspaceData {
        SubspaceData {
            ambient: s.ambient(),
            basis: s
                .basis_vectors()
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_subspace(&self, field: &Field) -> Result<Subspace> {
        let vecs = self
            .basis
            .iter()
            .map(|v| {
                if v.len() != self.ambient {
                    return Err(Error::Parse(format!("basis vector of length {} in ambient {}", v.len(), self.ambient)));
                }
                v.iter().map(|c| field.parse(c)).collect()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(field, self.ambient, &vecs))
    }
}

/// Serialized [`SplitCertificate`]: primary data plus the recorded checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateData {
    pub field: FieldSpec,
    pub path: SplitPath,
    pub host: RawStructure,
    pub r: TensorData,
    pub l1: SubspaceData,
    pub l2: SubspaceData,
    pub k1: RawStructure,
    pub pi1: MatrixData,
    pub k2: RawStructure,
    pub pi2: MatrixData,
    pub j: TensorData,
    pub j_inv: TensorData,
    pub twist_variant: String,
    pub f: MatrixData,
    pub checks: Report,
}

impl CertificateData {
    pub fn from_certificate(cert: &SplitCertificate) -> CertificateData {
        CertificateData {
            field: cert.host.field().spec().clone(),
            path: cert.path,
            host: hopf_to_raw(&cert.host),
            r: TensorData::from_tensor(&cert.r),
            l1: SubspaceData::from_subspace(&cert.l1),
            l2: SubspaceData::from_subspace(&cert.l2),
            k1: hopf_to_raw(&cert.k1.quotient),
            pi1: MatrixData::from_matrix(&cert.k1.projection.matrix),
            k2: hopf_to_raw(&cert.k2.quotient),
            pi2: MatrixData::from_matrix(&cert.k2.projection.matrix),
            j: TensorData::from_tensor(&cert.j),
            j_inv: TensorData::from_tensor(&cert.j_inv),
            twist_variant: cert.twist_variant.clone(),
            f: MatrixData::from_matrix(&cert.f.matrix),
            checks: cert.checks.clone(),
        }
    }

    /// Rebuilds the certificate. Quotient sections are recomputed; nothing
    /// is re-verified here (see `verify_certificate`).
    pub fn to_certificate(&self) -> Result<SplitCertificate> {
        let field = Field::new(self.field.clone())?;
        let host = Arc::new(hopf_from_raw(&field, &self.host)?);
        let quotient = |raw: &RawStructure, pi: &MatrixData| -> Result<QuotientData> {
            let k = Arc::new(hopf_from_raw(&field, raw)?);
            let m = pi.to_matrix(&field)?;
            if m.rows() != k.dim() || m.cols() != host.dim() {
                return Err(Error::Dimension(format!(
                    "projection is {}×{} for {} → {}",
                    m.rows(),
                    m.cols(),
                    host.dim(),
                    k.dim()
                )));
            }
            QuotientData::from_surjection(HopfMorphism::new(host.clone(), k, m))
        };
        let k1 = quotient(&self.k1, &self.pi1)?;
        let k2 = quotient(&self.k2, &self.pi2)?;
        let f_matrix = self.f.to_matrix(&field)?;
        if f_matrix.rows() != k1.dim() * k2.dim() || f_matrix.cols() != host.dim() {
            return Err(Error::Dimension("F has the wrong shape".into()));
        }
        let (d, n) = (host.dim(), k1.dim() * k2.dim());
        for (what, t, want) in [("R", &self.r, d), ("J", &self.j, n), ("J⁻¹", &self.j_inv, n)] {
            if t.dims != [want, want] {
                return Err(Error::Dimension(format!("{what} has shape {:?}, expected [{want}, {want}]", t.dims)));
            }
        }
        let parts = CertificateParts {
            path: self.path,
            r: self.r.to_tensor(&field)?,
            l1: self.l1.to_subspace(&field)?,
            l2: self.l2.to_subspace(&field)?,
            k1,
            k2,
            j: self.j.to_tensor(&field)?,
            j_inv: self.j_inv.to_tensor(&field)?,
            twist_variant: self.twist_variant.clone(),
            f_matrix,
            host,
        };
        reassemble(parts, self.checks.clone())
    }
}
