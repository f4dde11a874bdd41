use dpcodes_core::{parse_operator, MOperator};
use serde_json::{json, Value};

use crate::source::FieldArgs;
use crate::{Cli, Status};

/// Largest degree for the full six-element scan.
const PROPF_MAX_M: u32 = 8;

#[derive(clap::Args, Debug)]
pub struct Args {
    #[command(flatten)]
    field: FieldArgs,
    /// Operator literal.
    #[arg(long = "op")]
    op: String,
}

fn mark(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

pub fn run(cli: &Cli, args: &Args) -> anyhow::Result<Status> {
    let field = args.field.field()?;
    let f: MOperator = parse_operator(&args.op, field)?;
    let linear = f.is_linear();
    let bijective = f.is_bijective();
    let plus_id = linear.then(|| f.is_f_plus_id_bijective());
    let uniformity = f.differential_uniformity();
    let apn = uniformity <= 2;
    let propf = (field.m() <= PROPF_MAX_M).then(|| f.satisfies_propf()).transpose()?;
    let d3 = linear && bijective && plus_id == Some(true);
    let d5 = bijective && apn;
    let preparata = d5 && propf == Some(true) && field.m() <= 5;
    let rows: [(&str, &str, Option<bool>); 8] = [
        ("linear", "linear", Some(linear)),
        ("bijective", "one-to-one", Some(bijective)),
        ("f_plus_id_bijective", "f + Id one-to-one", plus_id),
        ("apn", "APN", Some(apn)),
        ("propf", "no six distinct solutions", propf),
        ("d3", "usable for d3", Some(d3)),
        ("d5", "usable for d5", Some(d5)),
        ("preparata", "usable for preparata", Some(preparata)),
    ];
    if cli.json {
        let mut obj = serde_json::Map::new();
        obj.insert("operator".into(), json!(f.literal()));
        obj.insert("provenance".into(), json!(f.provenance()));
        obj.insert("field".into(), json!(field.to_string()));
        obj.insert("differential_uniformity".into(), json!(uniformity));
        for (key, _, v) in rows {
            obj.insert(key.into(), v.map_or(Value::Null, Value::Bool));
        }
        println!("{}", Value::Object(obj));
    } else {
        println!("operator {} over {field}", f.provenance());
        println!("  differential uniformity: {uniformity}");
        for (_, name, v) in rows {
            println!("  {name}: {}", mark(v));
        }
    }
    Ok(Status::Ok)
}
