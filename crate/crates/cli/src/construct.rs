use std::path::PathBuf;

use anyhow::Context;
use dpcodes_core::{
    build_d3, build_d4_conference, build_preparata, write_code, AnyCode, D5Construction, Error,
};
use serde_json::json;

use crate::source::{FamilyArg, FamilyArgs};
use crate::{Cli, Status};

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(value_enum)]
    family: FamilyArg,
    #[command(flatten)]
    params: FamilyArgs,
    /// Output file; the code goes to stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn run(cli: &Cli, args: &Args) -> anyhow::Result<Status> {
    let p = &args.params;
    let code: AnyCode = match args.family {
        FamilyArg::D3 => build_d3(p.operator(args.family)?)?.into(),
        FamilyArg::D5 => D5Construction::with_syndrome(p.operator(args.family)?, p.syndrome()?)?
            .materialize()?
            .into(),
        FamilyArg::D4conf => build_d4_conference()?.into(),
        FamilyArg::Preparata => build_preparata(p.operator(args.family)?)?.into(),
    };
    let (text, alphabet) = match &code {
        AnyCode::Binary(c) => (write_code(c), "binary"),
        AnyCode::Ternary(c) => (write_code(c), "ternary"),
    };
    let meta = code.meta();
    let summary = if cli.json {
        json!({
            "family": meta.family.to_string(),
            "n": code.n(),
            "alphabet": alphabet,
            "cardinality": code.len(),
            "field": meta.field.map(|f| f.to_string()),
            "operator": meta.operator,
            "out": args.out.as_ref().map(|p| p.display().to_string()),
        })
        .to_string()
    } else {
        let mut s = format!("{} code: {} {alphabet} words of length {}", meta.family, code.len(), code.n());
        if let (Some(field), Some(op)) = (&meta.field, &meta.operator) {
            s.push_str(&format!(", field {field}, operator {op}"));
        }
        s
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(Error::Io)
                .with_context(|| format!("writing {}", path.display()))?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(Status::Ok)
}
