//! JSON instance schemas for `covsum verify` and their dispatch.
//!
//! Index sets in instance files (`J`) are 1-based; everything inside the
//! library is 0-based.

use clap::ValueEnum;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{root_of_unity, ElemCodec, Field, FieldSpec, GaloisField, PrimeField, Rationals, RootOfUnity};
use crate::error::{Error, Result};
use crate::poly::parse_poly;
use crate::residue::{AugmentedSystem, CoverSystem, ResidueClass};
use crate::subsetsum::{
    count_unit_fraction_subsets, verify_cor21, verify_cor22, verify_cor23, verify_cor24, verify_cor25,
    verify_lemma41, verify_theorem21, Strategy, Theorem21Instance,
};
use crate::zerosum::{cor33_ii_check, kemnitz_congruence, verify_thm32, ZeroSumInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    T21,
    C21,
    C22,
    C23,
    C24,
    C25,
    L41,
    T32,
    C33,
    Kemnitz,
    S10count,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::T21,
        Theorem::C21,
        Theorem::C22,
        Theorem::C23,
        Theorem::C24,
        Theorem::C25,
        Theorem::L41,
        Theorem::T32,
        Theorem::C33,
        Theorem::Kemnitz,
        Theorem::S10count,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T21 => "t21",
            Theorem::C21 => "c21",
            Theorem::C22 => "c22",
            Theorem::C23 => "c23",
            Theorem::C24 => "c24",
            Theorem::C25 => "c25",
            Theorem::L41 => "l41",
            Theorem::T32 => "t32",
            Theorem::C33 => "c33",
            Theorem::Kemnitz => "kemnitz",
            Theorem::S10count => "s10count",
        }
    }

    pub fn from_name(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.name() == s)
    }
}

/// A verifier's answer: the serialized report and whether the claim held.
#[derive(Clone, Debug, PartialEq)]
pub struct Checked {
    pub result: Value,
    pub holds: bool,
}

impl Checked {
    fn new<T: Serialize>(report: &T, holds: bool) -> Result<Checked> {
        let result = serde_json::to_value(report).map_err(|e| Error::invalid(format!("report serialization: {e}")))?;
        Ok(Checked { result, holds })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct T21File {
    pub field: FieldSpec,
    pub a0: ResidueClass,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "P")]
    pub p: String,
    #[serde(rename = "X")]
    pub x: Vec<[Value; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C21File {
    pub field: FieldSpec,
    pub a0: ResidueClass,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    #[serde(rename = "X")]
    pub x: Vec<[Value; 2]>,
    #[serde(default)]
    pub assert_alpha_zero: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C22File {
    pub p: u64,
    pub a0: ResidueClass,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    pub c_coeffs: Vec<u64>,
    pub c: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C23File {
    pub field: FieldSpec,
    pub a0: ResidueClass,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    pub matrix: Vec<Vec<Value>>,
    pub b: Vec<Value>,
    #[serde(rename = "X")]
    pub x: Vec<[Value; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C24File {
    pub field: FieldSpec,
    pub a0: ResidueClass,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    pub matrix: Vec<Vec<Value>>,
    pub b: Vec<Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C25File {
    pub classes: Vec<ResidueClass>,
    /// One per class except the last.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    #[serde(rename = "J", default)]
    pub j: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct L41File {
    pub field: FieldSpec,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multipliers: Option<Vec<i64>>,
    pub f: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct C33File {
    pub p: u64,
    pub h: u32,
    pub c: Vec<i64>,
    pub target: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KemnitzFile {
    pub q: u64,
    pub c: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct S10File {
    pub a0: ResidueClass,
    pub classes: Vec<ResidueClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
}

fn schema<T: DeserializeOwned>(theorem: Theorem, v: &Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::parse(format!("{} instance: {e}", theorem.name())))
}

fn multipliers(given: &Option<Vec<i64>>, k: usize) -> Vec<i64> {
    given.clone().unwrap_or_else(|| vec![1; k])
}

fn zero_based(j: &[usize]) -> Result<Vec<usize>> {
    j.iter()
        .map(|&s| s.checked_sub(1).ok_or_else(|| Error::parse("indices in J are 1-based")))
        .collect()
}

fn elem<F: ElemCodec>(f: &F, v: &Value) -> Result<F::Elem> {
    f.elem_from_json(v).ok_or_else(|| Error::parse(format!("{v} is not a field element")))
}

fn elems<F: ElemCodec>(f: &F, vs: &[Value]) -> Result<Vec<F::Elem>> {
    vs.iter().map(|v| elem(f, v)).collect()
}

fn pairs<F: ElemCodec>(f: &F, vs: &[[Value; 2]]) -> Result<Vec<(F::Elem, F::Elem)>> {
    vs.iter().map(|[b, c]| Ok((elem(f, b)?, elem(f, c)?))).collect()
}

fn matrix<F: ElemCodec>(f: &F, rows: &[Vec<Value>]) -> Result<Vec<Vec<F::Elem>>> {
    rows.iter().map(|r| elems(f, r)).collect()
}

fn augmented(a0: ResidueClass, classes: &[ResidueClass]) -> Result<AugmentedSystem> {
    Ok(AugmentedSystem::new(a0, CoverSystem::new(classes.to_vec())?))
}

/// Runs `$body` with `$f` bound to the concrete field described by `$spec`.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            FieldSpec::Rational => {
                let $f = &Rationals;
                $body
            }
            FieldSpec::Prime { p } => {
                let $f = &PrimeField::new(p)?;
                $body
            }
            FieldSpec::Extension { p, d } => {
                let $f = &GaloisField::new(p, d)?;
                $body
            }
        }
    };
}

fn run_t21<F: Field + ElemCodec>(f: &F, file: &T21File, strategy: Strategy) -> Result<Checked> {
    let system = augmented(file.a0, &file.classes)?;
    let k = system.tail.len();
    let inst = Theorem21Instance {
        multipliers: multipliers(&file.multipliers, k),
        j: zero_based(&file.j)?,
        p: parse_poly(f, k, &file.p)?,
        x: pairs(f, &file.x)?,
        system,
    };
    let rep = verify_theorem21(&inst, strategy)?;
    Checked::new(&rep, rep.theorem_holds)
}

fn run_c21<F: Field + ElemCodec>(f: &F, file: &C21File, strategy: Strategy) -> Result<Checked> {
    let system = augmented(file.a0, &file.classes)?;
    let mult = multipliers(&file.multipliers, system.tail.len());
    let rep = verify_cor21(f, &system, &mult, &pairs(f, &file.x)?, file.assert_alpha_zero, strategy)?;
    let alpha_zero_ok = rep.alpha_zero.as_ref().is_none_or(|a| !a.applicable || a.holds);
    Checked::new(&rep, rep.holds && alpha_zero_ok)
}

fn run_c23<F: Field + ElemCodec>(f: &F, file: &C23File, strategy: Strategy) -> Result<Checked> {
    let system = augmented(file.a0, &file.classes)?;
    let mult = multipliers(&file.multipliers, system.tail.len());
    let rep = verify_cor23(f, &system, &mult, &matrix(f, &file.matrix)?, &elems(f, &file.b)?, &pairs(f, &file.x)?, strategy)?;
    Checked::new(&rep, rep.progression.is_some())
}

fn run_c24<F: Field + ElemCodec>(f: &F, file: &C24File, strategy: Strategy) -> Result<Checked> {
    let system = augmented(file.a0, &file.classes)?;
    let mult = multipliers(&file.multipliers, system.tail.len());
    let rep = verify_cor24(f, &system, &mult, &matrix(f, &file.matrix)?, &elems(f, &file.b)?, strategy)?;
    Checked::new(&rep, rep.holds)
}

fn run_l41(file: &L41File, strategy: Strategy) -> Result<Checked> {
    let system = CoverSystem::new(file.classes.clone())?;
    let mult = multipliers(&file.multipliers, system.len());
    let rep = match root_of_unity(file.field, system.period())? {
        RootOfUnity::Cyclotomic { field, zeta } => {
            verify_lemma41(&system, &mult, &parse_poly(&field, system.len(), &file.f)?, &zeta, strategy)?
        }
        RootOfUnity::Galois { field, zeta } => {
            verify_lemma41(&system, &mult, &parse_poly(&field, system.len(), &file.f)?, &zeta, strategy)?
        }
    };
    Checked::new(&rep, rep.identity_holds && rep.equivalence_holds)
}

/// Parses `instance` against the schema of `theorem` and runs its verifier.
pub fn check_instance(theorem: Theorem, instance: &Value, strategy: Strategy) -> Result<Checked> {
    match theorem {
        Theorem::T21 => {
            let file: T21File = schema(theorem, instance)?;
            with_field!(file.field, |f| run_t21(f, &file, strategy))
        }
        Theorem::C21 => {
            let file: C21File = schema(theorem, instance)?;
            with_field!(file.field, |f| run_c21(f, &file, strategy))
        }
        Theorem::C22 => {
            let file: C22File = schema(theorem, instance)?;
            let system = augmented(file.a0, &file.classes)?;
            let mult = multipliers(&file.multipliers, system.tail.len());
            let rep = verify_cor22(&system, &mult, file.p, &file.c_coeffs, file.c, strategy)?;
            Checked::new(&rep, rep.progression.is_some())
        }
        Theorem::C23 => {
            let file: C23File = schema(theorem, instance)?;
            with_field!(file.field, |f| run_c23(f, &file, strategy))
        }
        Theorem::C24 => {
            let file: C24File = schema(theorem, instance)?;
            with_field!(file.field, |f| run_c24(f, &file, strategy))
        }
        Theorem::C25 => {
            let file: C25File = schema(theorem, instance)?;
            let system = CoverSystem::new(file.classes.clone())?;
            let mult = multipliers(&file.multipliers, system.len().saturating_sub(1));
            let rep = verify_cor25(&system, &mult, &zero_based(&file.j)?, strategy)?;
            Checked::new(&rep, rep.holds)
        }
        Theorem::L41 => run_l41(&schema(theorem, instance)?, strategy),
        Theorem::T32 => {
            let inst: ZeroSumInstance = schema(theorem, instance)?;
            let rep = verify_thm32(&inst, strategy)?;
            Checked::new(&rep, rep.holds)
        }
        Theorem::C33 => {
            let file: C33File = schema(theorem, instance)?;
            let rep = cor33_ii_check(file.p, file.h, &file.c, file.target, strategy)?;
            Checked::new(&rep, rep.holds)
        }
        Theorem::Kemnitz => {
            let file: KemnitzFile = schema(theorem, instance)?;
            let rep = kemnitz_congruence(file.q, &file.c, strategy)?;
            Checked::new(&rep, rep.holds)
        }
        Theorem::S10count => {
            let file: S10File = schema(theorem, instance)?;
            let rep = count_unit_fraction_subsets(&augmented(file.a0, &file.classes)?, file.m, strategy)?;
            Checked::new(&rep, rep.holds)
        }
    }
}
