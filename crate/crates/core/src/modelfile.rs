//! Plain-text model files.
//!
//! A model file is a sequence of records of whitespace-separated numbers.
//! Everything after `#` on a line is a comment; blank lines are ignored.
//!
//! ```text
//! 10 2 100 #<n_particles> <dimension> <max_iterations>
//! 1.7 1.7 #<c1> <c2>
//! 0.7 0.0 0.0 #<w> <w_min> <w_max>
//! -5.12 5.12 #<LB> <UB> x[0]
//! -5.12 5.12 #<LB> <UB> x[1]
//! ```
//!
//! The first record is `m n iterations`, then come the technique's parameter
//! records (see [`schema_for`]), then one `LB UB` record per decision
//! variable.

use std::fmt;

use thiserror::Error;

use crate::algorithms::{
    AbcParams, BaParams, CsParams, FaParams, FpaParams, HsParams, IhsParams, MboParams, PsoParams,
    Technique, TechniqueParams, WcaParams,
};

/// A fully parsed model file.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelFile {
    pub technique: Technique,
    pub m: usize,
    pub n: usize,
    pub iterations: usize,
    pub params: TechniqueParams,
    pub bounds: Vec<(f64, f64)>,
}

impl ModelFile {
    /// Default parameters for `technique` with uniform bounds.
    pub fn new(
        technique: Technique,
        m: usize,
        n: usize,
        iterations: usize,
        lb: f64,
        ub: f64,
    ) -> Self {
        ModelFile {
            technique,
            m,
            n,
            iterations,
            params: technique.default_params(),
            bounds: vec![(lb, ub); n],
        }
    }
}

/// A parse failure, located by 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("model file line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldKind {
    Integer,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub name: &'static str,
    pub kind: FieldKind,
}

const fn int(name: &'static str) -> Field {
    Field {
        name,
        kind: FieldKind::Integer,
    }
}

const fn real(name: &'static str) -> Field {
    Field {
        name,
        kind: FieldKind::Real,
    }
}

const HEADER: &[Field] = &[int("m"), int("n"), int("iterations")];
const BOUNDS: &[Field] = &[real("LB"), real("UB")];
const PSO_PARAMS: &[&[Field]] = &[
    &[real("c1"), real("c2")],
    &[real("w"), real("w_min"), real("w_max")],
];
const BA_PARAMS: &[&[Field]] = &[
    &[real("f_min"), real("f_max")],
    &[real("A"), real("r"), real("alpha"), real("gamma")],
];
const FPA_PARAMS: &[&[Field]] = &[&[real("p"), real("beta")]];
const FA_PARAMS: &[&[Field]] = &[&[real("alpha"), real("beta_0"), real("gamma")]];
const CS_PARAMS: &[&[Field]] = &[&[real("p_a"), real("alpha"), real("beta")]];
const MBO_PARAMS: &[&[Field]] = &[&[int("k"), int("x"), int("period")]];
const ABC_PARAMS: &[&[Field]] = &[&[int("limit")]];
const WCA_PARAMS: &[&[Field]] = &[&[int("n_sr"), real("d_max")]];
const HS_PARAMS: &[&[Field]] = &[&[real("HMCR"), real("PAR"), real("rho")]];
const IHS_PARAMS: &[&[Field]] = &[
    &[real("HMCR"), real("PAR_min"), real("PAR_max")],
    &[real("rho_min"), real("rho_max")],
];

/// Record layout of a technique's model file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Schema {
    pub technique: Technique,
    pub header: &'static [Field],
    pub params: &'static [&'static [Field]],
    pub bounds: &'static [Field],
}

impl Schema {
    fn param_fields(&self) -> impl Iterator<Item = &Field> {
        self.params.iter().flat_map(|r| r.iter())
    }
}

impl fmt::Display for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |r: &[Field]| r.iter().map(|f| f.name).collect::<Vec<_>>().join(" ");
        write!(f, "1: {}", names(self.header))?;
        for (i, r) in self.params.iter().enumerate() {
            write!(f, "; {}: {}", i + 2, names(r))?;
        }
        write!(f, "; {}..: {}", self.params.len() + 2, names(self.bounds))
    }
}

/// The record layout `technique` expects.
pub fn schema_for(technique: Technique) -> Schema {
    let params: &'static [&'static [Field]] = match technique {
        Technique::Pso | Technique::Aiwpso => PSO_PARAMS,
        Technique::Ba => BA_PARAMS,
        Technique::Fpa => FPA_PARAMS,
        Technique::Fa => FA_PARAMS,
        Technique::Cs => CS_PARAMS,
        Technique::Bh | Technique::Psfhs => &[],
        Technique::Mbo => MBO_PARAMS,
        Technique::Abc => ABC_PARAMS,
        Technique::Wca => WCA_PARAMS,
        Technique::Hs => HS_PARAMS,
        Technique::Ihs => IHS_PARAMS,
    };
    Schema {
        technique,
        header: HEADER,
        params,
        bounds: BOUNDS,
    }
}

#[derive(Debug, Clone, Copy)]
enum Value {
    Int(usize),
    Real(f64),
}

impl Value {
    fn real(self) -> f64 {
        match self {
            Value::Real(v) => v,
            Value::Int(v) => v as f64,
        }
    }

    fn int(self) -> usize {
        match self {
            Value::Int(v) => v,
            Value::Real(v) => v as usize,
        }
    }
}

fn params_from(technique: Technique, v: &[Value]) -> TechniqueParams {
    let r = |i: usize| v[i].real();
    let pso = || PsoParams {
        c1: r(0),
        c2: r(1),
        w: r(2),
        w_min: r(3),
        w_max: r(4),
    };
    match technique {
        Technique::Pso => TechniqueParams::Pso(pso()),
        Technique::Aiwpso => TechniqueParams::Aiwpso(pso()),
        Technique::Ba => TechniqueParams::Ba(BaParams {
            f_min: r(0),
            f_max: r(1),
            loudness: r(2),
            pulse_rate: r(3),
            alpha: r(4),
            gamma: r(5),
        }),
        Technique::Fpa => TechniqueParams::Fpa(FpaParams {
            p: r(0),
            beta: r(1),
        }),
        Technique::Fa => TechniqueParams::Fa(FaParams {
            alpha: r(0),
            beta0: r(1),
            gamma: r(2),
        }),
        Technique::Cs => TechniqueParams::Cs(CsParams {
            pa: r(0),
            alpha: r(1),
            beta: r(2),
        }),
        Technique::Bh => TechniqueParams::Bh,
        Technique::Mbo => TechniqueParams::Mbo(MboParams {
            k: v[0].int(),
            x: v[1].int(),
            period: v[2].int(),
        }),
        Technique::Abc => TechniqueParams::Abc(AbcParams {
            limit: v[0].int() as u32,
        }),
        Technique::Wca => TechniqueParams::Wca(WcaParams {
            n_sr: v[0].int(),
            d_max: r(1),
        }),
        Technique::Hs => TechniqueParams::Hs(HsParams {
            hmcr: r(0),
            par: r(1),
            bandwidth: r(2),
        }),
        Technique::Ihs => TechniqueParams::Ihs(IhsParams {
            hmcr: r(0),
            par_min: r(1),
            par_max: r(2),
            bandwidth_min: r(3),
            bandwidth_max: r(4),
        }),
        Technique::Psfhs => TechniqueParams::Psfhs,
    }
}

fn params_to(params: &TechniqueParams) -> Vec<String> {
    let s = |v: &[f64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    match params {
        TechniqueParams::Pso(p) | TechniqueParams::Aiwpso(p) => {
            s(&[p.c1, p.c2, p.w, p.w_min, p.w_max])
        }
        TechniqueParams::Ba(p) => {
            s(&[p.f_min, p.f_max, p.loudness, p.pulse_rate, p.alpha, p.gamma])
        }
        TechniqueParams::Fpa(p) => s(&[p.p, p.beta]),
        TechniqueParams::Fa(p) => s(&[p.alpha, p.beta0, p.gamma]),
        TechniqueParams::Cs(p) => s(&[p.pa, p.alpha, p.beta]),
        TechniqueParams::Bh | TechniqueParams::Psfhs => vec![],
        TechniqueParams::Mbo(p) => vec![p.k.to_string(), p.x.to_string(), p.period.to_string()],
        TechniqueParams::Abc(p) => vec![p.limit.to_string()],
        TechniqueParams::Wca(p) => vec![p.n_sr.to_string(), p.d_max.to_string()],
        TechniqueParams::Hs(p) => s(&[p.hmcr, p.par, p.bandwidth]),
        TechniqueParams::Ihs(p) => s(&[
            p.hmcr,
            p.par_min,
            p.par_max,
            p.bandwidth_min,
            p.bandwidth_max,
        ]),
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_record(line: usize, tokens: &[&str], fields: &[Field]) -> Result<Vec<Value>, ParseError> {
    if tokens.len() != fields.len() {
        let names: Vec<_> = fields.iter().map(|f| f.name).collect();
        return Err(err(
            line,
            format!(
                "expected {} field(s) `{}`, found {}",
                fields.len(),
                names.join(" "),
                tokens.len()
            ),
        ));
    }
    tokens
        .iter()
        .zip(fields)
        .map(|(tok, field)| match field.kind {
            FieldKind::Integer => tok.parse::<usize>().map(Value::Int).map_err(|_| {
                err(
                    line,
                    format!("`{}` expects an integer, found `{tok}`", field.name),
                )
            }),
            FieldKind::Real => match tok.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(Value::Real(v)),
                _ => Err(err(
                    line,
                    format!("`{}` expects a finite number, found `{tok}`", field.name),
                )),
            },
        })
        .collect()
}

/// Parses a model file for `technique`.
pub fn parse_model_file(text: &str, technique: Technique) -> Result<ModelFile, ParseError> {
    let schema = schema_for(technique);
    let mut records = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !tokens.is_empty() {
            records.push((i + 1, tokens));
        }
    }
    let mut records = records.into_iter();

    let (line, tokens) = records
        .next()
        .ok_or_else(|| err(last_line.max(1), "missing header `m n iterations`"))?;
    let header = parse_record(line, &tokens, schema.header)?;
    let (m, n, iterations) = (header[0].int(), header[1].int(), header[2].int());
    for (v, name) in [(m, "m"), (n, "n"), (iterations, "iterations")] {
        if v == 0 {
            return Err(err(line, format!("`{name}` must be positive")));
        }
    }

    let mut values = Vec::new();
    for fields in schema.params {
        let names: Vec<_> = fields.iter().map(|f| f.name).collect();
        let (line, tokens) = records.next().ok_or_else(|| {
            err(
                last_line + 1,
                format!("missing parameter record `{}`", names.join(" ")),
            )
        })?;
        values.extend(parse_record(line, &tokens, fields)?);
    }
    debug_assert_eq!(values.len(), schema.param_fields().count());

    let mut bounds = Vec::with_capacity(n);
    for j in 0..n {
        let (line, tokens) = records.next().ok_or_else(|| {
            err(
                last_line + 1,
                format!("expected {n} bounds records, found {j}"),
            )
        })?;
        let b = parse_record(line, &tokens, schema.bounds)?;
        let (lb, ub) = (b[0].real(), b[1].real());
        if lb >= ub {
            return Err(err(
                line,
                format!("LB {lb} must be below UB {ub} for x[{j}]"),
            ));
        }
        bounds.push((lb, ub));
    }
    if let Some((line, _)) = records.next() {
        return Err(err(
            line,
            format!("unexpected record after {n} bounds records"),
        ));
    }

    Ok(ModelFile {
        technique,
        m,
        n,
        iterations,
        params: params_from(technique, &values),
        bounds,
    })
}

/// Writes `model` in the canonical layout. Every number is written in its
/// shortest exact form, so parsing the output gives back `model`.
pub fn write_model_file(model: &ModelFile) -> String {
    let schema = schema_for(model.technique);
    let tag = |fields: &[Field]| {
        fields
            .iter()
            .map(|f| format!("<{}>", f.name))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let mut out = format!(
        "{} {} {} #<n_agents> <dimension> <max_iterations>\n",
        model.m, model.n, model.iterations
    );
    let mut values = params_to(&model.params).into_iter();
    for fields in schema.params {
        let line: Vec<String> = values.by_ref().take(fields.len()).collect();
        out.push_str(&format!("{} #{}\n", line.join(" "), tag(fields)));
    }
    for (j, (lb, ub)) in model.bounds.iter().enumerate() {
        out.push_str(&format!("{lb} {ub} #<LB> <UB> x[{j}]\n"));
    }
    out
}
