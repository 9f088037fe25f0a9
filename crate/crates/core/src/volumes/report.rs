//! The full volume report with a re-checkable witness for every value.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::barycenter::{simplex_dtrunk_barycenter, tropical_barycenter};
use super::ivolumes::{IVolume, LatticeEmbedding};
use super::lp::{sum_largest, sum_smallest};
use super::subsets::{tlvol_subsets, SubsetWitness};
use crate::ehrhart::{c_dminus1_direct, degree_bound, log_of};
use crate::error::{Error, Result};
use crate::linalg::{tdet, tminor, BruteForce, Minor, PermutationVolume};
use crate::tropical::{contains, format_rational, Rational, TropMatrix, TropScalar};

/// Which algorithm computes `tlvol`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Subsets,
    Triangulation,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeOptions {
    pub method: Method,
    /// Cap on the lattice points of the bounding box scanned by the triangulation.
    pub guard: u64,
}

impl Default for VolumeOptions {
    fn default() -> Self {
        VolumeOptions {
            method: Method::Subsets,
            guard: crate::ehrhart::DEFAULT_GUARD,
        }
    }
}

/// A full-dimensional alcove `base + ε·Δ(0)` with `Σ base + d·ε = tlvol`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcoveWitness {
    pub base: Vec<Rational>,
    pub edge: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeReport {
    pub d: usize,
    pub m: usize,
    pub method: Method,
    pub tlvol: TropScalar,
    pub tlvol_subsets: Option<TropScalar>,
    pub tlvol_triangulation: Option<TropScalar>,
    pub subset_witness: Option<SubsetWitness>,
    pub alcove_witness: Option<AlcoveWitness>,
    pub barycenter: Vec<TropScalar>,
    pub qtvol_plus: Minor,
    pub tvol: Option<PermutationVolume>,
    /// `(tlvol_i^+, tlvol_i^-)` for `i = 1..=d`; empty when unavailable.
    pub i_volumes: Vec<(IVolume, IVolume)>,
    /// `(tlsurf^-, tlsurf^+)`.
    pub tlsurf: Option<(TropScalar, TropScalar)>,
    pub discrete_surface: Option<TropScalar>,
    pub notes: Vec<String>,
}

/// `qtvol^+(M) = tminor_d(M)`, the maximal tropical `d × d` minor.
pub fn qtvol_plus(m: &TropMatrix) -> Result<Minor> {
    if m.cols() < m.rows() {
        return Err(Error::Dimension(format!(
            "qtvol+ needs at least {} columns, got {}",
            m.rows(),
            m.cols()
        )));
    }
    tminor(m, m.rows())
}

/// `(tlsurf^-, tlsurf^+) = (tlvol_{d−1}^-, tlvol_{d−1}^+)`.
pub fn tlsurf(e: &LatticeEmbedding) -> Result<(IVolume, IVolume)> {
    let i = e.complex.ambient_dim().saturating_sub(1);
    Ok((e.tlvol_i_minus(i)?, e.tlvol_i_plus(i)?))
}

/// `Log c_{d−1}^b(P)` from exact samples of the second highest coefficient.
pub fn discrete_surface(e: &LatticeEmbedding) -> Result<TropScalar> {
    if !e.is_identity() {
        return Err(Error::NotCanonical(
            "negative or fractional entry: the discrete surface needs entries in Z>=0".into(),
        ));
    }
    let d = e.complex.ambient_dim();
    if d < 2 {
        return Err(Error::OutOfRange {
            index: 0,
            lo: 1,
            hi: d,
        });
    }
    log_of(degree_bound(e.complex.generators()), |b| {
        Ok(c_dminus1_direct(&e.complex, b))
    })
}

/// Lattice points in the bounding box of the lattice image of `M`.
pub fn triangulation_candidates(m: &TropMatrix) -> Result<u128> {
    let (scaled, _, _) = LatticeEmbedding::lattice_image(m)?;
    let mut total: u128 = 1;
    for i in 0..scaled.rows() {
        let row = scaled.row(i);
        let hi = row
            .iter()
            .max()
            .and_then(|x| x.finite())
            .cloned()
            .unwrap_or_default();
        let lo = row
            .iter()
            .min()
            .and_then(|x| x.finite())
            .cloned()
            .unwrap_or_default();
        let w: BigInt = (hi - lo).to_integer() + 1;
        let w = u128::try_from(w).unwrap_or(u128::MAX);
        total = total.saturating_mul(w);
    }
    Ok(total)
}

fn embedding(m: &TropMatrix, guard: u64) -> Result<LatticeEmbedding> {
    let needed = triangulation_candidates(m)?;
    if needed > u128::from(guard) {
        return Err(Error::Guard { needed, guard });
    }
    LatticeEmbedding::new(m)
}

/// Computes every volume functional of `tconv(M)` that applies to `M`.
/// Functionals that need the triangulation are skipped, with a note, for
/// inputs with `-inf` entries or beyond the guard.
pub fn volume_report(m: &TropMatrix, opts: &VolumeOptions) -> Result<VolumeReport> {
    m.validate_generators()?;
    let d = m.rows();
    let mut notes = Vec::new();
    let emb = match embedding(m, opts.guard) {
        Ok(e) => Some(e),
        Err(e @ (Error::Guard { .. } | Error::NotCanonical(_))) => {
            if opts.method != Method::Subsets {
                return Err(e);
            }
            notes.push(format!("triangulation unavailable: {e}"));
            None
        }
        Err(e) => return Err(e),
    };

    let (sub, subset_witness) = if opts.method == Method::Triangulation {
        (None, None)
    } else {
        let (v, w) = tlvol_subsets(m)?;
        (Some(v), w)
    };
    let (tri, alcove_witness) = match (&emb, opts.method) {
        (Some(e), Method::Triangulation | Method::Both) => {
            let (v, base) = e.tlvol();
            let edge = Rational::new(BigInt::from(1), e.scale.clone());
            (Some(v), base.map(|base| AlcoveWitness { base, edge }))
        }
        _ => (None, None),
    };
    if let (Some(a), Some(b)) = (&sub, &tri) {
        if a != b {
            return Err(Error::Mismatch(format!(
                "tlvol: subsets {a} vs triangulation {b}"
            )));
        }
    }
    let tlvol = sub.clone().or_else(|| tri.clone()).expect("one method ran");

    let qtvol = qtvol_plus(m)?;
    let tvol = match BruteForce::default().tvol_max_sub(m) {
        Ok(v) => Some(v),
        Err(e @ (Error::SizeBound { .. } | Error::SingularDeterminant)) => {
            notes.push(format!("tvol unavailable: {e}"));
            None
        }
        Err(e) => return Err(e),
    };

    let mut i_volumes = Vec::new();
    let mut surf = None;
    let mut discrete = None;
    if let Some(e) = &emb {
        for i in 1..=d {
            i_volumes.push((e.tlvol_i_plus(i)?, e.tlvol_i_minus(i)?));
        }
        if d >= 2 {
            let (lo, hi) = tlsurf(e)?;
            surf = Some((lo.value, hi.value));
            match discrete_surface(e) {
                Ok(v) => discrete = Some(v),
                Err(err @ Error::NotCanonical(_)) => {
                    notes.push(format!("discrete surface unavailable: {err}"))
                }
                Err(err) => return Err(err),
            }
        }
    }

    Ok(VolumeReport {
        d,
        m: m.cols(),
        method: opts.method,
        tlvol,
        tlvol_subsets: sub,
        tlvol_triangulation: tri,
        subset_witness,
        alcove_witness,
        barycenter: tropical_barycenter(m),
        qtvol_plus: qtvol,
        tvol,
        i_volumes,
        tlsurf: surf,
        discrete_surface: discrete,
        notes,
    })
}

fn point_in(m: &TropMatrix, p: &[Rational]) -> Result<bool> {
    let x: Vec<TropScalar> = p.iter().cloned().map(TropScalar::Finite).collect();
    contains(m, &x)
}

impl VolumeReport {
    /// Re-evaluates every witness against `M`; `Ok(false)` on the first
    /// witness that does not reproduce its value.
    pub fn verify_witnesses(&self, m: &TropMatrix) -> Result<bool> {
        if let Some(w) = &self.subset_witness {
            let Some(t) = simplex_dtrunk_barycenter(&m.select_columns(&w.columns))? else {
                return Ok(false);
            };
            if t.barycenter != w.barycenter || Some(t.volume()) != self.tlvol_subsets {
                return Ok(false);
            }
        } else if self
            .tlvol_subsets
            .as_ref()
            .is_some_and(TropScalar::is_finite)
        {
            return Ok(false);
        }
        if let Some(w) = &self.alcove_witness {
            let v: Rational = w.base.iter().sum::<Rational>()
                + &w.edge * Rational::from_integer(BigInt::from(self.d));
            if Some(TropScalar::Finite(v)) != self.tlvol_triangulation || !point_in(m, &w.base)? {
                return Ok(false);
            }
        }
        let q = &self.qtvol_plus;
        if tdet(&m.submatrix(&q.rows, &q.cols))?.value != q.value {
            return Ok(false);
        }
        for (plus, minus) in &self.i_volumes {
            for (vol, smallest) in [(plus, false), (minus, true)] {
                match (&vol.value, &vol.witness) {
                    (TropScalar::NegInf, None) => {}
                    (TropScalar::Finite(v), Some(p)) => {
                        let got = if smallest {
                            sum_smallest(p, vol.i)
                        } else {
                            sum_largest(p, vol.i)
                        };
                        if got != *v || !point_in(m, p)? {
                            return Ok(false);
                        }
                    }
                    _ => return Ok(false),
                }
            }
        }
        Ok(true)
    }

    /// `tlvol_i^+` for `1 ≤ i ≤ d`, when the i-volumes were computed.
    pub fn tlvol_plus(&self, i: usize) -> Option<&TropScalar> {
        self.i_volumes.get(i.checked_sub(1)?).map(|p| &p.0.value)
    }

    pub fn tlvol_minus(&self, i: usize) -> Option<&TropScalar> {
        self.i_volumes.get(i.checked_sub(1)?).map(|p| &p.1.value)
    }

    /// Canonical JSON: fixed key order, every number as a string (`"p/q"` or `"-inf"`).
    pub fn to_json(&self) -> Value {
        let s = |x: &TropScalar| Value::String(x.to_string());
        let pt = |p: &[TropScalar]| Value::Array(p.iter().map(s).collect());
        let qpt = |p: &[Rational]| {
            Value::Array(
                p.iter()
                    .map(|q| Value::String(format_rational(q)))
                    .collect(),
            )
        };
        let opt = |x: &Option<TropScalar>| x.as_ref().map_or(Value::Null, s);
        let ivol = |v: &IVolume| {
            json!({
                "value": s(&v.value),
                "witness": v.witness.as_deref().map_or(Value::Null, qpt),
            })
        };
        json!({
            "d": self.d,
            "m": self.m,
            "method": self.method,
            "tlvol": s(&self.tlvol),
            "tlvol_subsets": opt(&self.tlvol_subsets),
            "tlvol_triangulation": opt(&self.tlvol_triangulation),
            "subset_witness": self.subset_witness.as_ref().map_or(Value::Null, |w| json!({
                "columns": w.columns,
                "barycenter": pt(&w.barycenter),
            })),
            "alcove_witness": self.alcove_witness.as_ref().map_or(Value::Null, |w| json!({
                "base": qpt(&w.base),
                "edge": format_rational(&w.edge),
            })),
            "barycenter": pt(&self.barycenter),
            "qtvol_plus": s(&self.qtvol_plus.value),
            "qtvol_witness": {"rows": self.qtvol_plus.rows, "cols": self.qtvol_plus.cols},
            "tvol": self.tvol.as_ref().map_or(Value::Null, |t| Value::String(t.to_string())),
            "i_volumes": self.i_volumes.iter().map(|(p, n)| json!({
                "i": p.i,
                "plus": ivol(p),
                "minus": ivol(n),
            })).collect::<Vec<_>>(),
            "tlsurf": self.tlsurf.as_ref().map_or(Value::Null, |(lo, hi)| json!({"minus": s(lo), "plus": s(hi)})),
            "discrete_surface": opt(&self.discrete_surface),
            "notes": self.notes,
        })
    }
}

impl Serialize for VolumeReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
