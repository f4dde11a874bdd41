//! Where a command's code comes from: a file or a family built on the spot.

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, ValueEnum};
use dpcodes_core::{
    build_d4_conference, parse_operator, read_code, AnyCode, D3Construction, D5Construction,
    Error, Family, FieldElement, FieldSpec, MOperator, PreparataConstruction,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    D3,
    D5,
    D4conf,
    Preparata,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    /// Field degree: words have length n = 2^m.
    #[arg(long)]
    pub m: Option<u32>,
    /// Irreducible modulus in hex (default: a fixed primitive polynomial).
    #[arg(long)]
    pub modulus: Option<String>,
    /// Primitive element in hex (default 0x2).
    #[arg(long)]
    pub generator: Option<String>,
}

impl FieldArgs {
    pub fn field(&self) -> anyhow::Result<FieldSpec> {
        let Some(m) = self.m else {
            bail!(Error::Precondition("--m is required".into()));
        };
        let mut spec = format!("m={m}");
        if let Some(modulus) = &self.modulus {
            spec.push_str(&format!(",mod={modulus}"));
        }
        if let Some(generator) = &self.generator {
            spec.push_str(&format!(",gen={generator}"));
        }
        Ok(spec.parse::<FieldSpec>()?)
    }
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Operator literal, e.g. `matrix3`, `gamma`, `pow:3`, `inv`, `gold:1`,
    /// `matrix:6/3/4`, `sum(matrix2,matrix2)`.
    #[arg(long = "op")]
    pub op: Option<String>,
    /// Syndrome of the odd coset for the distance-5 family, in hex.
    #[arg(long)]
    pub syndrome: Option<String>,
}

/// Operator used when `--op` is absent.
pub fn default_operator(family: FamilyArg, m: u32) -> &'static str {
    match (family, m) {
        (FamilyArg::D3, 2) => "matrix2",
        (FamilyArg::D3, 3) => "matrix3",
        (FamilyArg::D3, 4) => "sum(matrix2,matrix2)",
        (FamilyArg::D3, _) => "gamma",
        _ => "pow:3",
    }
}

impl FamilyArgs {
    pub fn operator(&self, family: FamilyArg) -> anyhow::Result<MOperator> {
        let field = self.field.field()?;
        let literal = self
            .op
            .clone()
            .unwrap_or_else(|| default_operator(family, field.m()).to_string());
        parse_operator(&literal, field).with_context(|| format!("operator {literal:?}"))
    }

    pub fn syndrome(&self) -> anyhow::Result<FieldElement> {
        match &self.syndrome {
            None => Ok(FieldElement::ZERO),
            Some(s) => {
                let v = u32::from_str_radix(s.trim_start_matches("0x"), 16)
                    .with_context(|| format!("syndrome {s:?} is not hex"))?;
                Ok(FieldElement(v))
            }
        }
    }
}

/// A family that may be too large to hold in memory.
pub enum Built {
    Code(AnyCode, Option<D3Construction>),
    StreamD3(D3Construction),
    StreamD5(D5Construction),
}

pub fn build(family: FamilyArg, args: &FamilyArgs) -> anyhow::Result<Built> {
    let too_large = |e: &Error| matches!(e, Error::TooLarge { .. });
    Ok(match family {
        FamilyArg::D4conf => Built::Code(build_d4_conference()?.into(), None),
        FamilyArg::D3 => {
            let c = D3Construction::new(args.operator(family)?)?;
            match c.materialize() {
                Ok(code) => Built::Code(code.into(), Some(c)),
                Err(e) if too_large(&e) => Built::StreamD3(c),
                Err(e) => return Err(e.into()),
            }
        }
        FamilyArg::D5 => {
            let c = D5Construction::with_syndrome(args.operator(family)?, args.syndrome()?)?;
            match c.materialize() {
                Ok(code) => Built::Code(code.into(), None),
                Err(e) if too_large(&e) => Built::StreamD5(c),
                Err(e) => return Err(e.into()),
            }
        }
        FamilyArg::Preparata => {
            let c = PreparataConstruction::new(args.operator(family)?)?;
            Built::Code(c.materialize()?.into(), None)
        }
    })
}

/// Read a code file, and rebuild its distance-3 construction from the header
/// when the file names one.
pub fn load(path: &PathBuf) -> anyhow::Result<(AnyCode, Option<D3Construction>)> {
    let text = std::fs::read_to_string(path)
        .map_err(Error::Io)
        .with_context(|| format!("reading {}", path.display()))?;
    let code = read_code(&text).with_context(|| format!("parsing {}", path.display()))?;
    let meta = code.meta();
    let construction = match (meta.family, meta.field, &meta.operator) {
        (Family::D3, Some(field), Some(op)) => parse_operator(op, field)
            .ok()
            .and_then(|op| D3Construction::new(op).ok())
            .filter(|c| c.n() == code.n()),
        _ => None,
    };
    Ok((code, construction))
}

/// `--file` or `--family` with its parameters.
#[derive(Args, Debug, Clone)]
pub struct SourceArgs {
    /// Code file to read.
    #[arg(long, conflicts_with = "family")]
    pub file: Option<PathBuf>,
    /// Family to construct instead of reading a file.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[command(flatten)]
    pub params: FamilyArgs,
}

impl SourceArgs {
    pub fn resolve(&self) -> anyhow::Result<Built> {
        match (&self.file, self.family) {
            (Some(path), _) => {
                let (code, c) = load(path)?;
                Ok(Built::Code(code, c))
            }
            (None, Some(family)) => build(family, &self.params),
            (None, None) => bail!(Error::Precondition("give --file or --family".into())),
        }
    }
}
