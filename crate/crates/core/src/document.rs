//! JSON documents for rings, extensions, partitions and codes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chainring::{ChainRing, ChainRingSpec, Elem};
use crate::error::{Error, Result};
use crate::galois::GaloisExtension;
use crate::modcodes::LinearCode;
use crate::tracecodes::EvalBasis;

/// An element in its external encoding: a bare integer when the encoding has
/// a single coefficient, an array otherwise. Either form is accepted on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemRepr {
    Scalar(u64),
    Digits(Vec<u64>),
}

impl ElemRepr {
    pub fn of(ring: &ChainRing, a: Elem) -> Self {
        match ring.encode_elem(a).as_slice() {
            [d] => ElemRepr::Scalar(*d),
            ds => ElemRepr::Digits(ds.to_vec()),
        }
    }

    pub fn decode(&self, ring: &ChainRing) -> Result<Elem> {
        match self {
            ElemRepr::Scalar(d) => ring.decode_elem(&[*d]),
            ElemRepr::Digits(ds) => ring.decode_elem(ds),
        }
    }
}

/// `{"base": <ring>, "m": 4}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDocument {
    pub base: ChainRingSpec,
    pub m: u32,
}

impl ExtensionDocument {
    pub fn build(&self) -> Result<GaloisExtension> {
        GaloisExtension::new(&ChainRing::new(&self.base)?, self.m)
    }
}

/// Partition file: coset representative → level.
pub type PartitionDocument = BTreeMap<u64, u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    /// `C_η(R; A)`.
    Trace,
    /// `L_η(S; A)`, a code over the extension.
    Lrs,
}

/// A code given by exactly one of: a generator matrix, a cyclotomic
/// partition, or a coset set with a construction kind.
///
/// With `extension_degree = m`, generator entries are elements of the degree-`m`
/// extension of `ring` rather than of `ring` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDocument {
    pub ring: ChainRingSpec,
    pub length: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension_degree: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<ElemRepr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<PartitionDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
}

/// A resolved code document.
#[derive(Debug, Clone)]
pub struct BuiltCode {
    pub code: LinearCode,
    /// Present when the code lives over an extension of the document's ring.
    pub extension: Option<GaloisExtension>,
}

impl CodeDocument {
    /// Generator-matrix document for a code over `ring` (or over `ext.top()` when
    /// `ext` is given), rows in reduced form.
    pub fn from_code(code: &LinearCode, ext: Option<&GaloisExtension>) -> Self {
        let ring = code.ring();
        let generators = code
            .generators()
            .iter()
            .map(|r| r.iter().map(|&x| ElemRepr::of(ring, x)).collect())
            .collect();
        CodeDocument {
            ring: ext.map_or_else(|| ring.spec(), |e| e.base().spec()),
            length: code.length(),
            extension_degree: ext.map(GaloisExtension::degree),
            generators: Some(generators),
            partition: None,
            set: None,
            construction: None,
        }
    }

    pub fn build(&self) -> Result<BuiltCode> {
        let sources = [self.generators.is_some(), self.partition.is_some(), self.set.is_some()];
        if sources.iter().filter(|&&b| b).count() != 1 {
            return Err(Error::InvalidSpec(
                "a code document needs exactly one of generators, partition, set".into(),
            ));
        }
        if self.set.is_some() != self.construction.is_some() {
            return Err(Error::InvalidSpec("set and construction go together".into()));
        }
        let ring = ChainRing::new(&self.ring)?;
        if let Some(rows) = &self.generators {
            let ext = self.extension_degree.map(|m| GaloisExtension::new(&ring, m)).transpose()?;
            let over = ext.as_ref().map_or(&ring, |e| e.top());
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|x| x.decode(over)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let code = LinearCode::new(over, self.length, &rows)?;
            return Ok(BuiltCode { code, extension: ext });
        }
        if self.extension_degree.is_some() {
            return Err(Error::InvalidSpec("extension_degree applies to generator documents".into()));
        }
        let basis = EvalBasis::new(&ring, self.length as u64)?;
        if let Some(assignment) = &self.partition {
            let p = basis.universe().make_partition(assignment, ring.s())?;
            return Ok(BuiltCode { code: basis.code_from_partition(&p)?, extension: None });
        }
        let set = basis.universe().set(self.set.iter().flatten().copied())?;
        match self.construction.expect("checked above") {
            Construction::Trace => Ok(BuiltCode { code: basis.trace_eval_code(&set)?, extension: None }),
            Construction::Lrs => Ok(BuiltCode {
                code: basis.lrs_code(&set)?,
                extension: Some(basis.extension().clone()),
            }),
        }
    }
}
