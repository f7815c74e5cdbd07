//! Catalog of the 42 closed-form statements and their exact evaluator.
//!
//! Every right-hand side is evaluated exactly as printed, including the
//! ones the audit shows to be wrong. Whether a prediction is true is
//! decided in [`crate::verify`], never here.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::ExactNumber;
use crate::indices::{IndexKind, IndexVector};
use crate::transforms::Transform;

/// The six blocks of seven statements, one item per [`IndexKind`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// Theorems 2.1-2.7 on `S_k(G)`.
    SubdivisionTheorem,
    /// Theorems 2.8-2.14 on `R_k(G)`.
    SemiTotalTheorem,
    /// `S_k` recurrences (`CS_REC_i`).
    SubdivisionRecurrence,
    /// `S_k` of an r-regular graph (`CS_REG_i`).
    SubdivisionRegular,
    /// `R_k` recurrences (`CR_REC_i`).
    SemiTotalRecurrence,
    /// `R_k` of an r-regular graph (`CR_REG_i`).
    SemiTotalRegular,
}

impl Block {
    pub const ALL: [Block; 6] = [
        Block::SubdivisionTheorem,
        Block::SemiTotalTheorem,
        Block::SubdivisionRecurrence,
        Block::SubdivisionRegular,
        Block::SemiTotalRecurrence,
        Block::SemiTotalRegular,
    ];

    pub fn transform(self) -> Transform {
        match self {
            Block::SubdivisionTheorem
            | Block::SubdivisionRecurrence
            | Block::SubdivisionRegular => Transform::SubdivisionK,
            _ => Transform::SemiTotalK,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Block::SubdivisionTheorem | Block::SemiTotalTheorem => "T2",
            Block::SubdivisionRecurrence => "CS_REC",
            Block::SubdivisionRegular => "CS_REG",
            Block::SemiTotalRecurrence => "CR_REC",
            Block::SemiTotalRegular => "CR_REG",
        }
    }
}

/// Which context fields a formula reads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inputs {
    /// Indices of `G` plus n, m, k.
    Base,
    /// Indices of the `(k-1)`-level graph plus m, k.
    Previous,
    /// Both of the above.
    BaseAndPrevious,
    /// Only n, r, k of an r-regular `G`.
    Regular,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormulaId {
    pub block: Block,
    pub kind: IndexKind,
}

impl FormulaId {
    pub const fn new(block: Block, kind: IndexKind) -> FormulaId {
        FormulaId { block, kind }
    }

    /// Position of `kind` inside its block, 1-based (the roman numeral).
    pub fn item(self) -> usize {
        IndexKind::ALL.iter().position(|&k| k == self.kind).unwrap() + 1
    }

    /// Theorem number after the "2." for theorem ids.
    pub fn theorem_number(self) -> Option<usize> {
        match self.block {
            Block::SubdivisionTheorem => Some(self.item()),
            Block::SemiTotalTheorem => Some(self.item() + 7),
            _ => None,
        }
    }

    pub fn transform(self) -> Transform {
        self.block.transform()
    }

    /// Position in [`catalog`] order.
    pub fn ordinal(self) -> usize {
        let b = Block::ALL.iter().position(|&b| b == self.block).unwrap();
        b * 7 + self.item() - 1
    }

    pub fn is_regular(self) -> bool {
        matches!(
            self.block,
            Block::SubdivisionRegular | Block::SemiTotalRegular
        )
    }

    pub fn is_recurrence(self) -> bool {
        matches!(
            self.block,
            Block::SubdivisionRecurrence | Block::SemiTotalRecurrence
        )
    }

    /// The theorem a corollary item follows from (itself for theorems).
    pub fn parent(self) -> FormulaId {
        let block = match self.block {
            Block::SubdivisionTheorem
            | Block::SubdivisionRecurrence
            | Block::SubdivisionRegular => Block::SubdivisionTheorem,
            _ => Block::SemiTotalTheorem,
        };
        FormulaId::new(block, self.kind)
    }

    pub fn all() -> impl Iterator<Item = FormulaId> {
        Block::ALL.into_iter().flat_map(|b| {
            IndexKind::ALL
                .into_iter()
                .map(move |k| FormulaId::new(b, k))
        })
    }

    pub fn inputs(self) -> Inputs {
        match self.block {
            Block::SubdivisionTheorem | Block::SemiTotalTheorem => Inputs::Base,
            Block::SubdivisionRecurrence => Inputs::Previous,
            Block::SemiTotalRecurrence => Inputs::BaseAndPrevious,
            Block::SubdivisionRegular | Block::SemiTotalRegular => Inputs::Regular,
        }
    }

    /// Smallest k at which the statement is claimed or derivable.
    ///
    /// Theorems whose derivation needs degree-2 chains or new vertices start
    /// at 1. A subdivision recurrence needs its parent at both k and k-1, so
    /// it starts one above a parent that starts at 1. The semi-total
    /// recurrences are stated for k >= 1.
    pub fn k_min(self) -> u32 {
        use IndexKind::*;
        match self.block {
            Block::SubdivisionTheorem | Block::SubdivisionRegular => match self.kind {
                M2 | HM | SDD => 1,
                _ => 0,
            },
            Block::SemiTotalTheorem | Block::SemiTotalRegular => match self.kind {
                PI2 | SDD => 1,
                _ => 0,
            },
            Block::SubdivisionRecurrence => match self.kind {
                M2 | HM | SDD => 2,
                _ => 1,
            },
            Block::SemiTotalRecurrence => 1,
        }
    }

    /// The right-hand side as printed, in plain ASCII.
    pub fn formula_text(self) -> &'static str {
        use IndexKind::*;
        match (self.block, self.kind) {
            (Block::SubdivisionTheorem, M1) => "M1(G) + 4km",
            (Block::SubdivisionTheorem, M2) => "2M1(G) + 4(k-1)m",
            (Block::SubdivisionTheorem, F) => "F(G) + 8km",
            (Block::SubdivisionTheorem, PI1) => "4^(km) PI1(G)",
            (Block::SubdivisionTheorem, PI2) => "4^(km) PI2(G)",
            (Block::SubdivisionTheorem, HM) => "F(G) + 4M1(G) + 16km - 8m",
            (Block::SubdivisionTheorem, SDD) => "(1/2)M1(G) + 2(k-1)m + 2n",

            (Block::SemiTotalTheorem, M1) => "(k+1)^2 M1(G) + 4km",
            (Block::SemiTotalTheorem, M2) => "2k(k+1)M1(G) + (k+1)^2 M2(G)",
            (Block::SemiTotalTheorem, F) => "(k+1)^3 F(G) + 8km",
            (Block::SemiTotalTheorem, PI1) => "4^(km) (k+1)^(2n) PI1(G)",
            (Block::SemiTotalTheorem, PI2) => "4^(km) {(k+1)^(2m) PI1(G)}^(k+1)",
            (Block::SemiTotalTheorem, HM) => "(k+1)^2 HM(G) + k(k+1)^2 F(G) + 4k(k+1)M1(G) + 8km",
            (Block::SemiTotalTheorem, SDD) => "SDD(G) + (1/2)(k+1)M1(G) + 2n/(k+1)",

            (Block::SubdivisionRecurrence, M1) => "M1(S_{k-1}(G)) + 4m",
            (Block::SubdivisionRecurrence, M2) => "M2(S_{k-1}(G)) + 4m",
            (Block::SubdivisionRecurrence, F) => "F(S_{k-1}(G)) + 8m",
            (Block::SubdivisionRecurrence, PI1) => "4^m PI1(S_{k-1}(G))",
            (Block::SubdivisionRecurrence, PI2) => "4^m PI2(S_{k-1}(G))",
            (Block::SubdivisionRecurrence, HM) => "HM(S_{k-1}(G)) + 16m",
            (Block::SubdivisionRecurrence, SDD) => "SDD(S_{k-1}(G)) + 2m",

            (Block::SubdivisionRegular, M1) => "nr^2 + 2nkr",
            (Block::SubdivisionRegular, M2) => "2nr(r+k-1)",
            (Block::SubdivisionRegular, F) => "nr^3 + 4nkr",
            (Block::SubdivisionRegular, PI1) => "2^(knr) r^(2n)",
            (Block::SubdivisionRegular, PI2) => "2^(nkr) r^(nr)",
            (Block::SubdivisionRegular, HM) => "nr(r^2 + 4r + 8k - 4)",
            (Block::SubdivisionRegular, SDD) => "(1/2)nr^2 + nr(k-1) + 2n",

            (Block::SemiTotalRecurrence, M1) => "M1(R_{k-1}(G)) + (2k+1)M1(G) + 4m",
            (Block::SemiTotalRecurrence, M2) => "M2(R_{k-1}(G)) + 4kM1(G) + (2k+1)M2(G)",
            (Block::SemiTotalRecurrence, F) => "F(R_{k-1}(G)) + (3k(k+1)+1)F(G) + 8m",
            (Block::SemiTotalRecurrence, PI1) => "4^m (1+1/k)^(2n) PI1(R_{k-1}(G))",
            (Block::SemiTotalRecurrence, PI2) => "k^(m-n) (k+1)^(n(k+1)) PI2(G) PI2(R_{k-1}(G))",
            (Block::SemiTotalRecurrence, HM) => {
                "HM(R_{k-1}(G)) + (2k-1)HM(G) + k(3k+1)F(G) + 8kM1(G) + 8m"
            }
            (Block::SemiTotalRecurrence, SDD) => "SDD(R_{k-1}(G)) + (1/2)M1(G) - 2n/(k(k+1))",

            (Block::SemiTotalRegular, M1) => "nr^2(k+1)^2 + 2nkr",
            (Block::SemiTotalRegular, M2) => "2k(k+1)nr^2 + (nr^3/2)(k+1)^2",
            (Block::SemiTotalRegular, F) => "nr^3(k+1) + 4nkr",
            (Block::SemiTotalRegular, PI1) => "2^(knr) r^n (k+1)^(2n)",
            (Block::SemiTotalRegular, PI2) => "2^(knr) {r(k+1)}^(nr(k+1))",
            (Block::SemiTotalRegular, HM) => "4nr^2(k+1)^2 + nr^3 k(k+1)^2 + 4nr^2 k(k+1) + 4nrk",
            (Block::SemiTotalRegular, SDD) => "(1/2)nr^2 - 2n/(k(k+1)) + 2",
        }
    }

    pub fn metadata(self) -> FormulaMeta {
        FormulaMeta {
            id: self,
            transform: self.transform(),
            kind: self.kind,
            k_min: self.k_min(),
            inputs: self.inputs(),
            formula: self.formula_text(),
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.theorem_number() {
            Some(t) => write!(f, "T2.{t}"),
            None => write!(f, "{}_{}", self.block.prefix(), self.item()),
        }
    }
}

impl fmt::Debug for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    /// Case-insensitive; `.`, `-` and `_` are interchangeable separators.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownFormula(s.to_string());
        let key = s.trim().to_ascii_uppercase().replace(['.', '-'], "_");
        let (prefix, num) = key.rsplit_once('_').ok_or_else(unknown)?;
        let num: usize = num.parse().map_err(|_| unknown())?;
        let block = match prefix {
            "T2" => match num {
                1..=7 => Block::SubdivisionTheorem,
                8..=14 => Block::SemiTotalTheorem,
                _ => return Err(unknown()),
            },
            "CS_REC" => Block::SubdivisionRecurrence,
            "CS_REG" => Block::SubdivisionRegular,
            "CR_REC" => Block::SemiTotalRecurrence,
            "CR_REG" => Block::SemiTotalRegular,
            _ => return Err(unknown()),
        };
        let item = if prefix == "T2" && num > 7 {
            num - 7
        } else {
            num
        };
        let kind = *IndexKind::ALL
            .get(item.wrapping_sub(1))
            .ok_or_else(unknown)?;
        Ok(FormulaId::new(block, kind))
    }
}

impl Serialize for FormulaId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FormulaId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Parses a list such as `T2.1..T2.13,CS_REG_2` or `all`.
///
/// Ranges follow catalog order and are inclusive.
pub fn parse_formula_list(spec: &str) -> Result<Vec<FormulaId>> {
    let mut out: Vec<FormulaId> = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(FormulaId::all());
            continue;
        }
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi): (FormulaId, FormulaId) = (lo.parse()?, hi.parse()?);
                if lo.ordinal() > hi.ordinal() {
                    return Err(Error::UnknownFormula(part.to_string()));
                }
                out.extend(
                    FormulaId::all()
                        .filter(|id| (lo.ordinal()..=hi.ordinal()).contains(&id.ordinal())),
                );
            }
            None => out.push(part.parse()?),
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// One catalog row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormulaMeta {
    pub id: FormulaId,
    pub transform: Transform,
    pub kind: IndexKind,
    pub k_min: u32,
    pub inputs: Inputs,
    pub formula: &'static str,
}

/// The full catalog in canonical order.
pub fn catalog() -> Vec<FormulaMeta> {
    FormulaId::all().map(FormulaId::metadata).collect()
}

pub fn formula_metadata(id: FormulaId) -> FormulaMeta {
    id.metadata()
}

/// Everything a right-hand side may refer to.
#[derive(Clone, Debug, Default)]
pub struct FormulaContext {
    pub n: u64,
    pub m: u64,
    pub k: u32,
    pub base: Option<IndexVector>,
    pub r: Option<u64>,
    pub prev: Option<IndexVector>,
}

impl FormulaContext {
    /// Context carrying the indices of `G` (n and m are taken from them).
    pub fn from_base(base: IndexVector, k: u32) -> FormulaContext {
        FormulaContext {
            n: base.n,
            m: base.m,
            k,
            base: Some(base),
            r: None,
            prev: None,
        }
    }

    /// Context for the regular corollaries: only n, r and k matter.
    pub fn regular(n: u64, r: u64, k: u32) -> FormulaContext {
        FormulaContext {
            n,
            m: n * r / 2,
            k,
            base: None,
            r: Some(r),
            prev: None,
        }
    }

    pub fn with_prev(mut self, prev: IndexVector) -> FormulaContext {
        self.prev = Some(prev);
        self
    }

    pub fn with_r(mut self, r: u64) -> FormulaContext {
        self.r = Some(r);
        self
    }
}

/// Evaluates `id` as printed; rejects `k < k_min(id)`.
pub fn evaluate_formula(id: FormulaId, ctx: &FormulaContext) -> Result<ExactNumber> {
    if ctx.k < id.k_min() {
        return Err(Error::BelowKMin {
            id: id.to_string(),
            k: ctx.k,
            k_min: id.k_min(),
        });
    }
    evaluate_unrestricted(id, ctx)
}

/// Like [`evaluate_formula`] but without the `k_min` check, for reporting
/// out-of-domain values. Recurrences still need `k >= 1`.
pub fn evaluate_unrestricted(id: FormulaId, ctx: &FormulaContext) -> Result<ExactNumber> {
    let name = || id.to_string();
    match id.inputs() {
        Inputs::Base => {
            let base = ctx
                .base
                .as_ref()
                .ok_or_else(|| Error::MissingBase(name()))?;
            Ok(theorem(id, base, ctx))
        }
        Inputs::Previous | Inputs::BaseAndPrevious => {
            if ctx.k == 0 {
                return Err(Error::BelowKMin {
                    id: name(),
                    k: 0,
                    k_min: 1,
                });
            }
            let prev = ctx
                .prev
                .as_ref()
                .ok_or_else(|| Error::MissingPrevious(name()))?;
            if id.block == Block::SubdivisionRecurrence {
                Ok(subdivision_recurrence(id.kind, prev, ctx))
            } else {
                let base = ctx
                    .base
                    .as_ref()
                    .ok_or_else(|| Error::MissingBase(name()))?;
                semi_total_recurrence(id.kind, base, prev, ctx)
            }
        }
        Inputs::Regular => {
            let r = ctx.r.ok_or_else(|| Error::MissingRegularDegree(name()))?;
            if 2 * ctx.m != ctx.n * r {
                return Err(Error::InconsistentRegular {
                    n: ctx.n,
                    m: ctx.m,
                    r,
                });
            }
            regular(id, ctx.n, r, ctx.k)
        }
    }
}

fn num(x: u64) -> ExactNumber {
    ExactNumber::from(x)
}

fn half() -> ExactNumber {
    ExactNumber::ratio(1, 2).unwrap()
}

fn pow(base: u64, exp: u64) -> ExactNumber {
    num(base).pow(exp as i64).expect("non-negative exponent")
}

fn theorem(id: FormulaId, g: &IndexVector, ctx: &FormulaContext) -> ExactNumber {
    use IndexKind::*;
    let (n, m, k) = (ctx.n, ctx.m, ctx.k as u64);
    let km = num(k * m);
    // (k-1)m may be negative at k = 0; keep it signed
    let k_minus_1_m = num(k * m) - num(m);
    let k1 = k + 1;
    match (id.block, id.kind) {
        (Block::SubdivisionTheorem, M1) => &g.m1 + &(num(4) * &km),
        (Block::SubdivisionTheorem, M2) => num(2) * &g.m1 + num(4) * k_minus_1_m,
        (Block::SubdivisionTheorem, F) => &g.f + &(num(8) * &km),
        (Block::SubdivisionTheorem, PI1) => pow(4, k * m) * &g.pi1,
        (Block::SubdivisionTheorem, PI2) => pow(4, k * m) * &g.pi2,
        (Block::SubdivisionTheorem, HM) => &g.f + &(num(4) * &g.m1) + num(16) * km - num(8 * m),
        (Block::SubdivisionTheorem, SDD) => half() * &g.m1 + num(2) * k_minus_1_m + num(2 * n),

        (Block::SemiTotalTheorem, M1) => num(k1 * k1) * &g.m1 + num(4) * km,
        (Block::SemiTotalTheorem, M2) => num(2 * k * k1) * &g.m1 + num(k1 * k1) * &g.m2,
        (Block::SemiTotalTheorem, F) => num(k1 * k1 * k1) * &g.f + num(8) * km,
        (Block::SemiTotalTheorem, PI1) => pow(4, k * m) * pow(k1, 2 * n) * &g.pi1,
        (Block::SemiTotalTheorem, PI2) => {
            let inner = pow(k1, 2 * m) * &g.pi1;
            pow(4, k * m) * inner.pow(k1 as i64).expect("non-negative exponent")
        }
        (Block::SemiTotalTheorem, HM) => {
            num(k1 * k1) * &g.hm + num(k * k1 * k1) * &g.f + num(4 * k * k1) * &g.m1 + num(8) * km
        }
        (Block::SemiTotalTheorem, SDD) => {
            &g.sdd + &(half() * num(k1) * &g.m1) + ExactNumber::ratio(2 * n, k1).expect("k+1 > 0")
        }
        _ => unreachable!("{id} is not a theorem"),
    }
}

fn subdivision_recurrence(
    kind: IndexKind,
    prev: &IndexVector,
    ctx: &FormulaContext,
) -> ExactNumber {
    use IndexKind::*;
    let m = ctx.m;
    match kind {
        M1 => &prev.m1 + &num(4 * m),
        M2 => &prev.m2 + &num(4 * m),
        F => &prev.f + &num(8 * m),
        PI1 => pow(4, m) * &prev.pi1,
        PI2 => pow(4, m) * &prev.pi2,
        HM => &prev.hm + &num(16 * m),
        SDD => &prev.sdd + &num(2 * m),
    }
}

fn semi_total_recurrence(
    kind: IndexKind,
    g: &IndexVector,
    prev: &IndexVector,
    ctx: &FormulaContext,
) -> Result<ExactNumber> {
    use IndexKind::*;
    let (n, m, k) = (ctx.n, ctx.m, ctx.k as u64);
    Ok(match kind {
        M1 => &prev.m1 + &(num(2 * k + 1) * &g.m1) + num(4 * m),
        M2 => &prev.m2 + &(num(4 * k) * &g.m1) + num(2 * k + 1) * &g.m2,
        F => &prev.f + &(num(3 * k * (k + 1) + 1) * &g.f) + num(8 * m),
        PI1 => {
            let ratio = ExactNumber::ratio(k + 1, k)?;
            pow(4, m) * ratio.pow(2 * n as i64)? * &prev.pi1
        }
        PI2 => {
            let k_pow = num(k).pow(m as i64 - n as i64)?;
            k_pow * pow(k + 1, n * (k + 1)) * &g.pi2 * &prev.pi2
        }
        HM => {
            // (2k-1) is negative only at k = 0, which is rejected above
            &prev.hm
                + &(num(2 * k - 1) * &g.hm)
                + num(k * (3 * k + 1)) * &g.f
                + num(8 * k) * &g.m1
                + num(8 * m)
        }
        SDD => &prev.sdd + &(half() * &g.m1) - ExactNumber::ratio(2 * n, k * (k + 1))?,
    })
}

fn regular(id: FormulaId, n: u64, r: u64, k32: u32) -> Result<ExactNumber> {
    use IndexKind::*;
    let k = k32 as u64;
    let k1 = k + 1;
    let nr = n * r;
    let km1 = num(k) - num(1);
    Ok(match (id.block, id.kind) {
        (Block::SubdivisionRegular, M1) => num(nr * r) + num(2 * nr * k),
        (Block::SubdivisionRegular, M2) => num(2 * nr) * (num(r) + km1),
        (Block::SubdivisionRegular, F) => num(nr * r * r) + num(4 * nr * k),
        (Block::SubdivisionRegular, PI1) => pow(2, k * nr) * pow(r, 2 * n),
        (Block::SubdivisionRegular, PI2) => pow(2, nr * k) * pow(r, nr),
        (Block::SubdivisionRegular, HM) => num(nr) * (num(r * r + 4 * r + 8 * k) - num(4)),
        (Block::SubdivisionRegular, SDD) => half() * num(nr * r) + num(nr) * km1 + num(2 * n),

        (Block::SemiTotalRegular, M1) => num(nr * r * k1 * k1) + num(2 * nr * k),
        (Block::SemiTotalRegular, M2) => {
            num(2 * k * k1 * nr * r) + half() * num(nr * r * r) * num(k1 * k1)
        }
        (Block::SemiTotalRegular, F) => num(nr * r * r * k1) + num(4 * nr * k),
        (Block::SemiTotalRegular, PI1) => pow(2, k * nr) * pow(r, n) * pow(k1, 2 * n),
        (Block::SemiTotalRegular, PI2) => pow(2, k * nr) * pow(r * k1, nr * k1),
        (Block::SemiTotalRegular, HM) => {
            num(4 * nr * r * k1 * k1)
                + num(nr * r * r * k * k1 * k1)
                + num(4 * nr * r * k * k1)
                + num(4 * nr * k)
        }
        (Block::SemiTotalRegular, SDD) => {
            half() * num(nr * r) - ExactNumber::ratio(2 * n, k * k1)? + num(2)
        }
        _ => unreachable!("{id} is not a regular corollary"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::indices::compute_all;

    fn id(s: &str) -> FormulaId {
        s.parse().unwrap()
    }

    fn c3() -> IndexVector {
        compute_all(&generate(&Family::Cycle { a: 3 }).unwrap())
    }

    #[test]
    fn catalog_is_complete() {
        let cat = catalog();
        assert_eq!(cat.len(), 42);
        for block in Block::ALL {
            let kinds: Vec<IndexKind> = cat
                .iter()
                .filter(|m| m.id.block == block)
                .map(|m| m.kind)
                .collect();
            assert_eq!(kinds, IndexKind::ALL.to_vec());
        }
        let names: std::collections::BTreeSet<String> =
            cat.iter().map(|m| m.id.to_string()).collect();
        assert_eq!(names.len(), 42);
    }

    #[test]
    fn ids_parse_with_either_separator() {
        assert_eq!(id("T2.14"), id("t2_14"));
        assert_eq!(
            id("T2.14"),
            FormulaId::new(Block::SemiTotalTheorem, IndexKind::SDD)
        );
        assert_eq!(id("T2.1").to_string(), "T2.1");
        assert_eq!(id("cs.reg.3").to_string(), "CS_REG_3");
        assert_eq!(id("CR_REC_5").kind, IndexKind::PI2);
        for bad in ["NOPE", "T2.15", "T2.0", "CS_REC_8", "CS_REC_0", "T3.1", ""] {
            assert!(bad.parse::<FormulaId>().is_err(), "{bad}");
        }
        for meta in catalog() {
            assert_eq!(meta.id.to_string().parse::<FormulaId>().unwrap(), meta.id);
        }
    }

    #[test]
    fn formula_lists_and_ranges() {
        let theorems = parse_formula_list("T2.1..T2.13").unwrap();
        assert_eq!(theorems.len(), 13);
        assert!(theorems.iter().all(|f| f.theorem_number().is_some()));
        assert_eq!(parse_formula_list("all").unwrap().len(), 42);
        assert_eq!(
            parse_formula_list("T2.14, t2_14,CS_REG_1").unwrap().len(),
            2
        );
        assert!(parse_formula_list("T2.5..T2.1").is_err());
    }

    #[test]
    fn metadata_examples() {
        let m = formula_metadata(id("T2_5"));
        assert_eq!(
            (m.transform, m.kind, m.k_min, m.inputs),
            (Transform::SubdivisionK, IndexKind::PI2, 0, Inputs::Base)
        );
        let m = formula_metadata(id("CS_REG_3"));
        assert_eq!(
            (m.transform, m.kind, m.inputs),
            (Transform::SubdivisionK, IndexKind::F, Inputs::Regular)
        );
        let m = formula_metadata(id("CR_REC_5"));
        assert_eq!(
            (m.transform, m.kind, m.inputs, m.k_min),
            (
                Transform::SemiTotalK,
                IndexKind::PI2,
                Inputs::BaseAndPrevious,
                1
            )
        );
    }

    #[test]
    fn k_min_table() {
        let ones = ["T2.2", "T2.6", "T2.7", "T2.12", "T2.14"];
        for t in 1..=14 {
            let f = id(&format!("T2.{t}"));
            let want = if ones.contains(&f.to_string().as_str()) {
                1
            } else {
                0
            };
            assert_eq!(f.k_min(), want, "{f}");
        }
        for f in FormulaId::all().filter(|f| f.is_regular()) {
            assert_eq!(f.k_min(), f.parent().k_min());
        }
        for f in FormulaId::all().filter(|f| f.is_recurrence()) {
            assert!(f.k_min() >= 1);
        }
        assert_eq!(id("CS_REC_2").k_min(), 2);
        assert_eq!(id("CS_REC_1").k_min(), 1);
    }

    #[test]
    fn evaluation_examples() {
        let base = c3();
        let ctx = |k| FormulaContext::from_base(base.clone(), k);
        assert_eq!(evaluate_formula(id("T2_1"), &ctx(2)).unwrap(), 36u64);
        assert_eq!(evaluate_formula(id("T2_12"), &ctx(1)).unwrap(), 1u64 << 30);
        assert_eq!(evaluate_formula(id("T2_14"), &ctx(2)).unwrap(), 26u64);
        assert_eq!(evaluate_formula(id("T2_14"), &ctx(1)).unwrap(), 21u64);
        assert_eq!(evaluate_formula(id("T2_8"), &ctx(0)).unwrap(), 12u64);
        assert_eq!(evaluate_formula(id("T2_10"), &ctx(1)).unwrap(), 216u64);
    }

    #[test]
    fn k_zero_reductions() {
        let g = compute_all(&generate(&Family::Star { a: 4 }).unwrap());
        let ctx = FormulaContext::from_base(g.clone(), 0);
        for name in [
            "T2_1", "T2_3", "T2_4", "T2_5", "T2_8", "T2_9", "T2_10", "T2_11", "T2_13",
        ] {
            let f = id(name);
            assert_eq!(evaluate_formula(f, &ctx).unwrap(), *g.get(f.kind), "{name}");
        }
    }

    #[test]
    fn regular_items() {
        // K_4 at k=1, the printed HM item
        let ctx = FormulaContext::regular(4, 3, 1);
        assert_eq!(evaluate_formula(id("CR_REG_6"), &ctx).unwrap(), 1344u64);
        // C_3: n=3, r=2
        assert_eq!(
            evaluate_formula(id("CS_REG_1"), &FormulaContext::regular(3, 2, 1)).unwrap(),
            24u64
        );
        assert_eq!(
            evaluate_formula(id("CS_REG_1"), &FormulaContext::regular(3, 2, 2)).unwrap(),
            36u64
        );
        assert_eq!(
            evaluate_formula(id("CR_REG_3"), &FormulaContext::regular(3, 2, 1)).unwrap(),
            72u64
        );
        assert_eq!(
            evaluate_formula(id("CR_REG_7"), &FormulaContext::regular(3, 2, 1)).unwrap(),
            5u64
        );
    }

    #[test]
    fn recurrence_examples() {
        let base = c3();
        let ctx = FormulaContext::from_base(base.clone(), 1).with_prev(base.clone());
        assert_eq!(evaluate_formula(id("CR_REC_6"), &ctx).unwrap(), 312u64);
        assert_eq!(evaluate_formula(id("CR_REC_5"), &ctx).unwrap(), 1u64 << 18);
        assert_eq!(evaluate_formula(id("CR_REC_7"), &ctx).unwrap(), 9u64);
    }

    #[test]
    fn context_errors() {
        let base = c3();
        let ctx = FormulaContext::from_base(base.clone(), 1);
        assert!(matches!(
            evaluate_formula(id("CR_REC_1"), &ctx),
            Err(Error::MissingPrevious(_))
        ));
        assert!(matches!(
            evaluate_formula(id("CS_REG_1"), &ctx),
            Err(Error::MissingRegularDegree(_))
        ));
        let bad = FormulaContext::from_base(base.clone(), 1).with_r(3);
        assert!(matches!(
            evaluate_formula(id("CS_REG_1"), &bad),
            Err(Error::InconsistentRegular { .. })
        ));
        let k0 = FormulaContext::from_base(base.clone(), 0);
        assert!(matches!(
            evaluate_formula(id("T2.14"), &k0),
            Err(Error::BelowKMin { k_min: 1, .. })
        ));
        let k0_prev = FormulaContext::from_base(base.clone(), 0).with_prev(base);
        assert!(evaluate_unrestricted(id("CR_REC_4"), &k0_prev).is_err());
        assert!(evaluate_unrestricted(id("CR_REC_7"), &k0_prev).is_err());
        assert!(evaluate_unrestricted(id("CR_REG_7"), &FormulaContext::regular(3, 2, 0)).is_err());
    }

    #[test]
    fn evaluation_is_deterministic() {
        let ctx = FormulaContext::from_base(c3(), 3);
        for f in FormulaId::all().filter(|f| f.inputs() == Inputs::Base) {
            assert_eq!(
                evaluate_formula(f, &ctx).unwrap(),
                evaluate_formula(f, &ctx).unwrap()
            );
        }
    }
}
