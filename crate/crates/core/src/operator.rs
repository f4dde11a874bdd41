//! Maps `F^m -> F^m` consumed by the constructions, and brute-force
//! certificates of the properties each construction requires.
//!
//! Every operator is tabulated on construction; all property checks scan the
//! table. They are deliberately naive since the rest of the crate trusts them.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{parse_hex, FieldElement, FieldSpec};

/// Rows of an `m x m` matrix over GF(2). Row `i` and field elements are both
/// written coordinate 1 first, i.e. coordinate `j` is bit `m - j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: Vec<u32>,
}

impl BitMatrix {
    pub fn new(rows: Vec<u32>) -> Result<Self> {
        let m = rows.len();
        if m == 0 || m > 16 || rows.iter().any(|&r| r >> m != 0) {
            return Err(Error::OperatorLiteral {
                literal: format!("{rows:?}"),
                reason: "rows must form a square matrix of size 1..=16".into(),
            });
        }
        Ok(BitMatrix { rows })
    }

    pub fn identity(m: u32) -> Self {
        BitMatrix {
            rows: (1..=m).map(|i| 1 << (m - i)).collect(),
        }
    }

    /// The `m = 2` example `[[1,1],[1,0]]`.
    pub fn example2() -> Self {
        BitMatrix {
            rows: vec![0b11, 0b10],
        }
    }

    /// The `m = 3` example `[[1,1,0],[0,1,1],[1,0,0]]`.
    pub fn example3() -> Self {
        BitMatrix {
            rows: vec![0b110, 0b011, 0b100],
        }
    }

    pub fn dim(&self) -> u32 {
        self.rows.len() as u32
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn apply(&self, x: u32) -> u32 {
        let m = self.dim();
        self.rows
            .iter()
            .enumerate()
            .fold(0, |y, (i, &row)| y | ((row & x).count_ones() & 1) << (m - 1 - i as u32))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OperatorKind {
    Matrix(BitMatrix),
    /// `x -> gamma * x` for the field generator `gamma`.
    PrimitiveMul,
    Power(u64),
    /// `x -> x^-1`, with `0 -> 0`.
    Inverse,
    /// `(x', x'') -> (left(x'), right(x''))`, where `x'` is the low
    /// `left.m` bits of the element.
    DirectSum(Box<MOperator>, Box<MOperator>),
    /// An arbitrary tabulated map.
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MOperator {
    field: FieldSpec,
    kind: OperatorKind,
    table: Vec<FieldElement>,
    literal: String,
    provenance: String,
}

impl MOperator {
    fn tabulate(field: FieldSpec, kind: OperatorKind, literal: String) -> Self {
        let mut op = MOperator {
            field,
            kind,
            table: Vec::new(),
            provenance: literal.clone(),
            literal,
        };
        op.table = field
            .enumerate()
            .into_iter()
            .map(|x| op.evaluate(x))
            .collect();
        op
    }

    pub fn matrix(field: FieldSpec, matrix: BitMatrix) -> Result<Self> {
        if matrix.dim() != field.m() {
            return Err(Error::OperatorLiteral {
                literal: format!("{:?}", matrix.rows()),
                reason: format!("matrix has {} rows but m = {}", matrix.dim(), field.m()),
            });
        }
        let literal = format!(
            "matrix:{}",
            matrix
                .rows()
                .iter()
                .map(|r| format!("{r:x}"))
                .collect::<Vec<_>>()
                .join("/")
        );
        Ok(Self::tabulate(field, OperatorKind::Matrix(matrix), literal))
    }

    pub fn primitive_mul(field: FieldSpec) -> Self {
        Self::tabulate(field, OperatorKind::PrimitiveMul, "gamma".into())
    }

    pub fn power(field: FieldSpec, k: u64) -> Self {
        Self::tabulate(field, OperatorKind::Power(k), format!("pow:{k}"))
    }

    pub fn inverse(field: FieldSpec) -> Self {
        Self::tabulate(field, OperatorKind::Inverse, "inv".into())
    }

    /// The Gold map `x -> x^(2^l + 1)`.
    pub fn gold(field: FieldSpec, l: u32) -> Result<Self> {
        let m = field.m();
        if l == 0 || gcd(l, m) != 1 {
            return Err(Error::GoldNotCoprime { m, l });
        }
        let mut op = Self::power(field, (1u64 << l) + 1);
        op.literal = format!("gold:{l}");
        op.provenance = format!("gold(m={m},l={l})");
        Ok(op)
    }

    /// Blockwise sum acting on the default field of degree
    /// `left.m + right.m`.
    pub fn direct_sum(left: MOperator, right: MOperator) -> Result<Self> {
        let field = FieldSpec::default_for(left.field.m() + right.field.m())?;
        let literal = format!("sum({},{})", left.literal, right.literal);
        Ok(Self::tabulate(
            field,
            OperatorKind::DirectSum(Box::new(left), Box::new(right)),
            literal,
        ))
    }

    pub fn from_table(field: FieldSpec, values: Vec<FieldElement>) -> Result<Self> {
        if values.len() != field.size() || values.iter().any(|v| v.0 >> field.m() != 0) {
            return Err(Error::OperatorLiteral {
                literal: format!("{values:?}"),
                reason: format!("need {} values below 2^{}", field.size(), field.m()),
            });
        }
        let literal = format!(
            "table:{}",
            values.iter().map(|v| format!("{:x}", v.0)).collect::<Vec<_>>().join("/")
        );
        Ok(MOperator {
            field,
            kind: OperatorKind::Table,
            table: values,
            provenance: literal.clone(),
            literal,
        })
    }

    /// Evaluate from the symbolic definition, bypassing the table.
    pub fn evaluate(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        match &self.kind {
            OperatorKind::Matrix(a) => FieldElement(a.apply(x.0)),
            OperatorKind::PrimitiveMul => f.mul(f.generator(), x),
            OperatorKind::Power(k) => {
                if *k == 0 {
                    FieldElement::ONE
                } else {
                    f.pow(x, *k)
                }
            }
            OperatorKind::Inverse => f.inv(x),
            OperatorKind::DirectSum(l, r) => {
                let lm = l.field.m();
                let low = x.0 & ((1 << lm) - 1);
                let high = x.0 >> lm;
                FieldElement(l.evaluate(FieldElement(low)).0 | r.evaluate(FieldElement(high)).0 << lm)
            }
            OperatorKind::Table => self.table[x.0 as usize],
        }
    }

    #[inline]
    pub fn apply(&self, x: FieldElement) -> FieldElement {
        self.table[x.0 as usize]
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    pub fn kind(&self) -> &OperatorKind {
        &self.kind
    }

    pub fn table(&self) -> &[FieldElement] {
        &self.table
    }

    /// A literal that parses back to this operator.
    pub fn literal(&self) -> &str {
        &self.literal
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_linear(&self) -> bool {
        let t = &self.table;
        (0..t.len()).all(|x| (0..t.len()).all(|y| t[x ^ y] == t[x] + t[y]))
    }

    pub fn is_bijective(&self) -> bool {
        is_permutation(self.table.iter().map(|v| v.0), self.field.size())
    }

    /// Whether `x -> f(x) + x` is one-to-one.
    pub fn is_f_plus_id_bijective(&self) -> bool {
        is_permutation(
            self.table.iter().enumerate().map(|(x, v)| v.0 ^ x as u32),
            self.field.size(),
        )
    }

    /// Largest number of solutions `x` of `f(x) + f(x + a) = b` over `a != 0`.
    pub fn differential_uniformity(&self) -> usize {
        let size = self.field.size();
        let t = &self.table;
        (1..size)
            .into_par_iter()
            .map(|a| {
                let mut counts = vec![0u32; size];
                for x in 0..size {
                    counts[(t[x].0 ^ t[x ^ a].0) as usize] += 1;
                }
                counts.into_iter().max().unwrap_or(0) as usize
            })
            .max()
            .unwrap_or(0)
    }

    /// Every nonzero input difference produces each output difference 0 or
    /// 2 times.
    pub fn is_apn(&self) -> bool {
        self.differential_uniformity() <= 2
    }

    /// A solution in six pairwise different elements of
    /// `a+b+c+d = 0, a+b+e+t = 0, f(a)+f(b)+f(c)+f(d)+f(e)+f(t) = 0`, if any.
    ///
    /// Scans every `(a, b, c, e)` and sets `d = a+b+c`, `t = a+b+e`.
    pub fn propf_violation(&self) -> Result<Option<[FieldElement; 6]>> {
        let m = self.m();
        if m > 8 {
            return Err(Error::TooLarge {
                what: format!("six-element system scan over GF(2^{m})"),
                size: 1u128 << (4 * m),
                cap: 1u128 << 32,
            });
        }
        let size = self.field.size() as u32;
        let t = &self.table;
        let f = |x: u32| t[x as usize].0;
        Ok((0..size).into_par_iter().find_map_any(|a| {
            for b in 0..size {
                let ab = a ^ b;
                let fab = f(a) ^ f(b);
                for c in 0..size {
                    let d = ab ^ c;
                    let fabcd = fab ^ f(c) ^ f(d);
                    for e in 0..size {
                        let tt = ab ^ e;
                        if fabcd ^ f(e) ^ f(tt) == 0 && pairwise_distinct(&[a, b, c, d, e, tt]) {
                            return Some([a, b, c, d, e, tt].map(FieldElement));
                        }
                    }
                }
            }
            None
        }))
    }

    pub fn satisfies_propf(&self) -> Result<bool> {
        Ok(self.propf_violation()?.is_none())
    }

    /// The same scan restricted to `a = 0, b = 1`. Only sound for operators
    /// where a solution can be translated and scaled to that form, which holds
    /// for quadratic power maps such as the Gold maps.
    pub fn satisfies_propf_normalized(&self) -> bool {
        let size = self.field.size() as u32;
        let t = &self.table;
        let f = |x: u32| t[x as usize].0;
        let base = f(0) ^ f(1);
        (0..size).into_par_iter().all(|c| {
            let d = 1 ^ c;
            (0..size).all(|e| {
                let tt = 1 ^ e;
                base ^ f(c) ^ f(d) ^ f(e) ^ f(tt) != 0 || !pairwise_distinct(&[0, 1, c, d, e, tt])
            })
        })
    }
}

impl fmt::Display for MOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.provenance)
    }
}

fn pairwise_distinct(xs: &[u32]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs[i + 1..].iter().all(|y| x != y))
}

fn is_permutation(values: impl Iterator<Item = u32>, size: usize) -> bool {
    let mut seen = vec![false; size];
    for v in values {
        let slot = &mut seen[v as usize];
        if *slot {
            return false;
        }
        *slot = true;
    }
    true
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

// ---------------------------------------------------------------------------
// Literals: matrix:<hex rows joined by '/'>, matrix2, matrix3, id, gamma,
// pow:<k>, inv, gold:<l>, table:<hex values joined by '/'>, sum(<op>,<op>).

#[derive(Debug, Clone)]
enum Literal {
    Matrix(Vec<u32>),
    Identity,
    Gamma,
    Pow(u64),
    Inv,
    Gold(u32),
    Table(Vec<u32>),
    Sum(Box<Literal>, Box<Literal>),
}

impl Literal {
    fn fixed_dim(&self) -> Option<u32> {
        match self {
            Literal::Matrix(rows) => Some(rows.len() as u32),
            Literal::Table(values) => values.len().checked_ilog2(),
            Literal::Sum(l, r) => Some(l.fixed_dim()? + r.fixed_dim()?),
            _ => None,
        }
    }
}

fn literal_error(literal: &str, reason: impl Into<String>) -> Error {
    Error::OperatorLiteral {
        literal: literal.to_string(),
        reason: reason.into(),
    }
}

fn parse_hex_list(full: &str, list: &str) -> Result<Vec<u32>> {
    list.split('/')
        .map(|r| parse_hex(r).ok_or_else(|| literal_error(full, format!("bad hex value {r:?}"))))
        .collect()
}

fn parse_literal(s: &str) -> Result<Literal> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix("sum(").and_then(|r| r.strip_suffix(')')) {
        let mut depth = 0i32;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    split = Some(i);
                    break;
                }
                _ => {}
            }
        }
        let i = split.ok_or_else(|| literal_error(s, "sum needs two operands"))?;
        return Ok(Literal::Sum(
            Box::new(parse_literal(&inner[..i])?),
            Box::new(parse_literal(&inner[i + 1..])?),
        ));
    }
    let (head, arg) = match s.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (s, None),
    };
    let arg_of = |what: &str| arg.ok_or_else(|| literal_error(s, format!("{what} needs an argument")));
    Ok(match head {
        "matrix" => Literal::Matrix(parse_hex_list(s, arg_of("matrix")?)?),
        "matrix2" => Literal::Matrix(BitMatrix::example2().rows),
        "matrix3" => Literal::Matrix(BitMatrix::example3().rows),
        "table" => Literal::Table(parse_hex_list(s, arg_of("table")?)?),
        "id" => Literal::Identity,
        "gamma" => Literal::Gamma,
        "inv" => Literal::Inv,
        "pow" => Literal::Pow(
            arg_of("pow")?
                .parse()
                .map_err(|_| literal_error(s, "pow needs a decimal exponent"))?,
        ),
        "gold" => Literal::Gold(
            arg_of("gold")?
                .parse()
                .map_err(|_| literal_error(s, "gold needs a decimal l"))?,
        ),
        _ => return Err(literal_error(s, "unknown operator")),
    })
}

fn build(lit: &Literal, field: FieldSpec, text: &str) -> Result<MOperator> {
    Ok(match lit {
        Literal::Matrix(rows) => MOperator::matrix(field, BitMatrix::new(rows.clone())?)?,
        Literal::Identity => MOperator::matrix(field, BitMatrix::identity(field.m()))?,
        Literal::Gamma => MOperator::primitive_mul(field),
        Literal::Pow(k) => MOperator::power(field, *k),
        Literal::Inv => MOperator::inverse(field),
        Literal::Gold(l) => MOperator::gold(field, *l)?,
        Literal::Table(values) => {
            MOperator::from_table(field, values.iter().map(|&v| FieldElement(v)).collect())?
        }
        Literal::Sum(l, r) => {
            let m = field.m();
            let (lm, rm) = match (l.fixed_dim(), r.fixed_dim()) {
                (Some(a), _) if a < m => (a, m - a),
                (None, Some(b)) if b < m => (m - b, b),
                _ => {
                    return Err(literal_error(
                        text,
                        format!("cannot split m = {m} between the two operands"),
                    ))
                }
            };
            let left = build(l, FieldSpec::default_for(lm)?, text)?;
            let right = build(r, FieldSpec::default_for(rm)?, text)?;
            MOperator::direct_sum(left, right)?
        }
    })
}

/// Parse an operator literal over the given field.
pub fn parse_operator(literal: &str, field: FieldSpec) -> Result<MOperator> {
    let lit = parse_literal(literal)?;
    let op = build(&lit, field, literal)?;
    if op.m() != field.m() {
        return Err(literal_error(literal, format!("operator has m = {}, field has m = {}", op.m(), field.m())));
    }
    Ok(op)
}
