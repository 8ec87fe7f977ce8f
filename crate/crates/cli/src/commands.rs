//! One function per subcommand; each returns the text to print.

use std::fmt::Write;

use chaincodes::arith::gcd;
use chaincodes::cosets::{format_set, mod_u_image, CosetSet};
use chaincodes::document::{CodeDocument, Construction, ElemRepr};
use chaincodes::modcodes::DEFAULT_WEIGHT_BUDGET;
use chaincodes::oracle::{self, Budget};
use chaincodes::tracecodes::count_cyclic_codes;
use chaincodes::{
    contract_code, contract_dual, ChainRing, ContractionContext, CosetUniverse, Elem, Error, EvalBasis, Family,
    GaloisExtension, LinearCode,
};
use serde_json::{json, Value};

use crate::input::{CliError, CliResult};

pub fn ring_name(ring: &ChainRing) -> String {
    match ring.family() {
        Family::GaloisRing => format!("GR({}^{}, {})", ring.p(), ring.s(), ring.residue_degree()),
        Family::PowerSeries => format!("F_{}[u]/(u^{})", ring.q(), ring.s()),
    }
}

/// Scalar encodings print bare, longer ones as `[a,b]`.
pub fn show(ring: &ChainRing, a: Elem) -> String {
    match ring.encode_elem(a).as_slice() {
        [d] => d.to_string(),
        _ => ring.format_elem(a),
    }
}

fn show_row(ring: &ChainRing, row: &[Elem]) -> String {
    let items: Vec<String> = row.iter().map(|&x| show(ring, x)).collect();
    format!("[{}]", items.join(" "))
}

fn show_tuple(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(usize::to_string).collect();
    format!("({})", items.join(", "))
}

/// `γ` with its integer reading when it is `±1`.
fn show_unit(ring: &ChainRing, g: Elem) -> String {
    let base = show(ring, g);
    if g == ring.from_int(-1) && g != ring.one() {
        format!("{base} (= -1)")
    } else {
        base
    }
}

fn json_elem(ring: &ChainRing, a: Elem) -> Value {
    serde_json::to_value(ElemRepr::of(ring, a)).expect("element encodings serialize")
}

fn json_rows(ring: &ChainRing, rows: &[Vec<Elem>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(|&x| json_elem(ring, x)).collect())).collect())
}

pub fn document_text(code: &LinearCode, ext: Option<&GaloisExtension>) -> String {
    let doc = CodeDocument::from_code(code, ext);
    serde_json::to_string(&doc).expect("documents serialize") + "\n"
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

pub fn budget(cap: Option<u64>) -> Budget {
    cap.map_or_else(Budget::default, |n| Budget { max_vectors: n, max_codewords: n })
}

pub fn ring_info(ring: &ChainRing, as_json: bool) -> CliResult<String> {
    let ideals: Vec<u64> = (0..=ring.s()).map(|t| ring.q().pow(ring.s() - t)).collect();
    let teich = GaloisExtension::new(ring, 1)?.teichmuller_generator();
    let modulus: Vec<u64> = ring.modulus().to_vec();
    if as_json {
        return Ok(pretty(&json!({
            "name": ring_name(ring),
            "spec": ring.spec(),
            "q": ring.q(),
            "size": ring.size(),
            "units": ring.unit_group_order(),
            "modulus": modulus,
            "theta": json_elem(ring, ring.theta()),
            "ideal_sizes": ideals,
            "teichmuller_generator": json_elem(ring, teich),
            "teichmuller_order": ring.mult_order(teich)?,
        })));
    }
    let mut out = String::new();
    let ideals: Vec<String> = ideals.iter().map(u64::to_string).collect();
    writeln!(out, "ring          {}", ring_name(ring)).unwrap();
    writeln!(out, "p, r, s       {}, {}, {}", ring.p(), ring.residue_degree(), ring.s()).unwrap();
    writeln!(out, "q             {}", ring.q()).unwrap();
    writeln!(out, "|R|           {}", ring.size()).unwrap();
    writeln!(out, "|R^x|         {}", ring.unit_group_order()).unwrap();
    writeln!(out, "modulus       {modulus:?}").unwrap();
    writeln!(out, "theta         {}", show(ring, ring.theta())).unwrap();
    writeln!(out, "|theta^t R|   {}", ideals.join(" ")).unwrap();
    writeln!(out, "teichmuller   {} of order {}", show(ring, teich), ring.mult_order(teich)?).unwrap();
    Ok(out)
}

pub fn cosets(ell: u64, q: u64, u: Option<u64>, as_json: bool) -> CliResult<String> {
    let uni = CosetUniverse::new(ell, q)?;
    if u == Some(0) {
        return Err(Error::InvalidSpec("u must be positive".into()).into());
    }
    let list = uni.cosets();
    if as_json {
        let cosets: Vec<Value> = list
            .iter()
            .map(|c| {
                let mut v = json!({"representative": c.first(), "members": c});
                if let Some(u) = u {
                    v["mod_u"] = json!(mod_u_image(c, u));
                }
                v
            })
            .collect();
        return Ok(pretty(&json!({
            "ell": ell,
            "q": q,
            "order": uni.order(),
            "cosets": cosets,
            "representatives": uni.representatives(),
            "classes": uni.count_classes(),
        })));
    }
    let mut out = String::new();
    writeln!(out, "ell = {ell}, q = {q}, ord_ell(q) = {}", uni.order()).unwrap();
    for c in &list {
        write!(out, "C({}) = {}", c.first().unwrap(), format_set(c)).unwrap();
        if let Some(u) = u {
            write!(out, "  mod {u}: {}", format_set(&mod_u_image(c, u))).unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "representatives = {}", format_set(&uni.representatives())).unwrap();
    writeln!(out, "classes = {}", uni.count_classes()).unwrap();
    Ok(out)
}

pub fn build_from_set(ring: &ChainRing, ell: u64, set: &[u64], construction: Construction) -> CliResult<String> {
    let basis = EvalBasis::new(ring, ell)?;
    let a: CosetSet = basis.universe().set(set.iter().copied())?;
    Ok(match construction {
        Construction::Trace => document_text(&basis.trace_eval_code(&a)?, None),
        Construction::Lrs => document_text(&basis.lrs_code(&a)?, Some(basis.extension())),
    })
}

pub fn build_from_partition(
    ring: &ChainRing,
    ell: u64,
    assignment: &chaincodes::document::PartitionDocument,
) -> CliResult<String> {
    let basis = EvalBasis::new(ring, ell)?;
    let p = basis.universe().make_partition(assignment, ring.s())?;
    Ok(document_text(&basis.code_from_partition(&p)?, None))
}

pub struct AnalyzeOptions {
    pub gamma: Option<String>,
    pub skip_weight: bool,
    pub budget: Option<u64>,
    pub json: bool,
}

pub fn analyze(built: &chaincodes::document::BuiltCode, opts: &AnalyzeOptions) -> CliResult<String> {
    let code = &built.code;
    let ring = code.ring();
    let sf = code.standard_form();
    let weight = if opts.skip_weight || code.is_zero() {
        None
    } else {
        Some(code.min_weight(opts.budget.unwrap_or(DEFAULT_WEIGHT_BUDGET))?)
    };
    let cyclic = code.is_cyclic();
    let partition = if cyclic && built.extension.is_none() && gcd(code.length() as u64, ring.q()) == 1 {
        let basis = EvalBasis::new(ring, code.length() as u64)?;
        Some(basis.decompose_cyclic(code)?)
    } else {
        None
    };
    let gamma = opts.gamma.as_deref().map(|g| crate::input::element(ring, g)).transpose()?;
    let constacyclic = gamma.map(|g| code.is_constacyclic(g)).transpose()?;
    let exponent = code.size_exponent();
    if opts.json {
        let mut v = json!({
            "ring": ring_name(ring),
            "length": code.length(),
            "type": code.code_type(),
            "rank": code.rank(),
            "free": code.is_free(),
            "cardinality": code.cardinality().to_string(),
            "cardinality_exponent": exponent,
            "standard_form": json_rows(ring, &sf.rows),
            "permutation": sf.permutation,
            "cyclic": cyclic,
            "min_weight": weight,
        });
        if let Some(p) = &partition {
            v["partition"] = json!(p.blocks());
        }
        if let (Some(g), Some(c)) = (gamma, constacyclic) {
            v["gamma"] = json_elem(ring, g);
            v["constacyclic"] = json!(c);
        }
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    writeln!(out, "ring          {}", ring_name(ring)).unwrap();
    writeln!(out, "length        {}", code.length()).unwrap();
    writeln!(out, "type          {}", show_tuple(&code.code_type())).unwrap();
    writeln!(out, "rank          {}", code.rank()).unwrap();
    writeln!(out, "free          {}", code.is_free()).unwrap();
    writeln!(out, "|C|           {}^{} = {}", ring.q(), exponent, code.cardinality()).unwrap();
    let perm: Vec<String> = sf.permutation.iter().map(usize::to_string).collect();
    writeln!(out, "standard form (columns {})", perm.join(" ")).unwrap();
    for row in &sf.rows {
        writeln!(out, "  {}", show_row(ring, row)).unwrap();
    }
    writeln!(out, "cyclic        {cyclic}").unwrap();
    if let Some(p) = &partition {
        writeln!(out, "partition     {p}").unwrap();
    }
    match (weight, opts.skip_weight) {
        (Some(w), _) => writeln!(out, "min weight    {w}").unwrap(),
        (None, true) => writeln!(out, "min weight    skipped").unwrap(),
        (None, false) => writeln!(out, "min weight    none (zero code)").unwrap(),
    }
    if let (Some(g), Some(c)) = (gamma, constacyclic) {
        writeln!(out, "constacyclic  {c} for gamma = {}", show_unit(ring, g)).unwrap();
    }
    Ok(out)
}

pub fn dual(built: &chaincodes::document::BuiltCode) -> CliResult<String> {
    Ok(document_text(&built.code.dual(), built.extension.as_ref()))
}

fn base_code(built: &chaincodes::document::BuiltCode, what: &str) -> CliResult<LinearCode> {
    if built.extension.is_some() {
        return Err(Error::Mismatch(format!("{what} needs a code over the base ring")).into());
    }
    Ok(built.code.clone())
}

pub fn contract(built: &chaincodes::document::BuiltCode, u: usize, as_json: bool) -> CliResult<String> {
    let c = base_code(built, "contraction")?;
    let k = contract_code(&c, u)?;
    let ring = c.ring();
    let star = k.partition.star_dual(u as u64, k.omega)?;
    let dual = contract_dual(&k)?;
    if dual != k.code.dual() {
        return Err(CliError::Failed("the star-dual contraction disagrees with the dual of K".into()));
    }
    let self_dual = dual == k.code;
    if as_json {
        let doc = |code: &LinearCode| serde_json::to_value(CodeDocument::from_code(code, None)).unwrap();
        return Ok(pretty(&json!({
            "u": u,
            "omega": k.omega,
            "gamma": json_elem(ring, k.gamma()),
            "gamma_order": k.context.gamma_order(),
            "partition": k.partition.blocks(),
            "star_dual": star.blocks(),
            "type": k.code.code_type(),
            "cardinality_exponent": k.code.size_exponent(),
            "self_dual": self_dual,
            "code": doc(&k.code),
            "dual": doc(&dual),
        })));
    }
    let mut out = String::new();
    writeln!(out, "u             {u}").unwrap();
    writeln!(out, "omega         {}", k.omega).unwrap();
    writeln!(out, "gamma         {}", show_unit(ring, k.gamma())).unwrap();
    write!(out, "gamma order   {}", k.context.gamma_order()).unwrap();
    if !k.context.has_exact_order() {
        write!(out, " (proper divisor of u)").unwrap();
    }
    out.push('\n');
    writeln!(out, "partition     {}", k.partition).unwrap();
    writeln!(out, "star dual     {star}").unwrap();
    writeln!(out, "K length      {}", k.code.length()).unwrap();
    writeln!(out, "K type        {}", show_tuple(&k.code.code_type())).unwrap();
    writeln!(out, "|K|           {}^{}", ring.q(), k.code.size_exponent()).unwrap();
    writeln!(out, "self-dual     {self_dual}").unwrap();
    writeln!(out, "K generators").unwrap();
    for row in k.code.generators() {
        writeln!(out, "  {}", show_row(ring, row)).unwrap();
    }
    Ok(out)
}

pub fn concat(built: &chaincodes::document::BuiltCode, u: usize, gamma: &str) -> CliResult<String> {
    let k = base_code(built, "concatenation")?;
    let g = crate::input::element(k.ring(), gamma)?;
    let ctx = ContractionContext::new(k.ring(), k.length(), u, g)?;
    Ok(document_text(&ctx.concatenation_code(&k)?, None))
}

pub fn enumerate_cyclic(ring: &ChainRing, ell: usize, budget: &Budget, as_json: bool) -> CliResult<String> {
    let codes = oracle::enumerate_cyclic_submodules(ring, ell, budget)?;
    let free = codes.iter().filter(|c| c.is_free()).count();
    let coprime = gcd(ell as u64, ring.q()) == 1;
    let basis = coprime.then(|| EvalBasis::new(ring, ell as u64)).transpose()?;
    let formula = coprime.then(|| count_cyclic_codes(ring, ell as u64)).transpose()?;
    let partitions = codes
        .iter()
        .map(|c| basis.as_ref().map(|b| b.decompose_cyclic(c)).transpose())
        .collect::<Result<Vec<_>, _>>()?;
    if as_json {
        let list: Vec<Value> = codes
            .iter()
            .zip(&partitions)
            .map(|(c, p)| {
                let mut v = json!({
                    "type": c.code_type(),
                    "cardinality_exponent": c.size_exponent(),
                    "generators": json_rows(ring, c.generators()),
                });
                if let Some(p) = p {
                    v["partition"] = json!(p.blocks());
                }
                v
            })
            .collect();
        let mut v = json!({"ring": ring_name(ring), "length": ell, "count": codes.len(), "free": free, "codes": list});
        if let Some((t, f)) = &formula {
            v["formula"] = json!({"count": t.to_string(), "free": f.to_string()});
        }
        return Ok(pretty(&v));
    }
    let mut out = String::new();
    writeln!(out, "cyclic codes of length {ell} over {}: {} ({free} free)", ring_name(ring), codes.len()).unwrap();
    if let Some((t, f)) = &formula {
        writeln!(out, "formula (s+1)^N = {t}, 2^N = {f}").unwrap();
    }
    for (i, (c, p)) in codes.iter().zip(&partitions).enumerate() {
        write!(out, "{i:>4}  {:<12} |C| = {}^{}", show_tuple(&c.code_type()), ring.q(), c.size_exponent()).unwrap();
        if let Some(p) = p {
            write!(out, "  {p}").unwrap();
        }
        out.push('\n');
    }
    Ok(out)
}
