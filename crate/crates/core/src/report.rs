//! Text, JSON and LaTeX renderings of the computed rings.
//!
//! JSON is built as `serde_json::Value` with sorted keys, so printing,
//! re-parsing and printing again is byte-identical. Integers are emitted
//! exactly, rationals as reduced `"p/q"` strings.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Number, Value};

use crate::abelian::{FgAbGroup, GradedGroups};
use crate::arith::{format_rational, Rational, WeightVector};
use crate::chenruan::{CrMonomial, CrRing, SectorData};
use crate::error::Result;
use crate::kawasaki::KawasakiRing;
use crate::kunneth::ProductGroups;
use crate::orbifold::OrbifoldRing;
use crate::poly::UPoly;

pub fn big_json(n: &BigUint) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn int_json(n: &BigInt) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integer"))
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn group_json(g: &FgAbGroup) -> Value {
    json!({
        "free_rank": g.free_rank(),
        "torsion": g.torsion().iter().map(big_json).collect::<Vec<_>>(),
    })
}

fn weights_json(w: &WeightVector) -> Value {
    json!(w.weights())
}

fn graded_json(g: &GradedGroups<u32>) -> Value {
    Value::Array(
        g.dense()
            .iter()
            .map(|(d, grp)| json!({"degree": d, "group": group_json(grp)}))
            .collect(),
    )
}

fn rational_graded_json(g: &GradedGroups<Rational>) -> Value {
    Value::Array(
        g.iter()
            .map(|(d, grp)| json!({"degree": rational_json(d), "group": group_json(grp)}))
            .collect(),
    )
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn euler_poly(c: &BigUint, d: u32) -> UPoly {
    UPoly::monomial(BigInt::from(c.clone()), d)
}

fn euler_latex(c: &BigUint, d: u32) -> String {
    match (c == &BigUint::from(1u32), d) {
        (_, 0) => c.to_string(),
        (true, 1) => "u".into(),
        (true, d) => format!("u^{{{d}}}"),
        (false, 1) => format!("{c}u"),
        (false, d) => format!("{c}u^{{{d}}}"),
    }
}

fn rational_latex(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Renders rows of cells as left-aligned columns.
fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Kawasaki ring

pub fn kawasaki_json(ring: &KawasakiRing, max_degree: u32) -> Value {
    let products: Vec<Value> = ring
        .product_table()
        .iter()
        .map(|p| {
            json!({
                "left": p.left,
                "right": p.right,
                "coefficient": big_json(&p.coefficient),
                "target": p.target,
            })
        })
        .collect();
    json!({
        "weights": weights_json(ring.weights()),
        "ell": ring.ell_table()[1..].iter().map(big_json).collect::<Vec<_>>(),
        "generators": (1..=ring.dim())
            .map(|k| json!({"name": format!("g{k}"), "degree": 2 * k}))
            .collect::<Vec<_>>(),
        "products": products,
        "gamma1_power_spans": ring.gamma1_power_spans(),
        "groups": graded_json(&ring.groups(max_degree)),
    })
}

pub fn kawasaki_text(ring: &KawasakiRing, max_degree: u32) -> String {
    let mut s = String::new();
    let n = ring.dim();
    writeln!(s, "Kawasaki ring of CP^{n}_{}", ring.weights()).unwrap();
    let ells: Vec<String> = ring.ell_table()[1..]
        .iter()
        .map(|l| l.to_string())
        .collect();
    writeln!(s, "l_1..l_{n}: {}", ells.join(", ")).unwrap();
    let gens: Vec<String> = (1..=n).map(|k| format!("g{k} (deg {})", 2 * k)).collect();
    writeln!(
        s,
        "generators: {}",
        if gens.is_empty() {
            "none".into()
        } else {
            gens.join(", ")
        }
    )
    .unwrap();
    writeln!(s, "products:").unwrap();
    for p in ring.product_table() {
        let rhs = match p.target {
            Some(t) => ring.gamma(t).map(|g| {
                ring.multiply(&ring.integer(BigInt::from(p.coefficient.clone())), &g)
                    .expect("same ring")
                    .to_string()
            }),
            None => Ok("0".into()),
        }
        .expect("index in range");
        writeln!(s, "  g{} * g{} = {rhs}", p.left, p.right).unwrap();
    }
    let spans = ring.gamma1_power_spans();
    if !spans.is_empty() {
        let all = spans.iter().all(|&b| b);
        writeln!(
            s,
            "g1 powers span every degree: {}",
            if all { "yes" } else { "no" }
        )
        .unwrap();
    }
    writeln!(s, "groups:").unwrap();
    for (d, g) in ring.groups(max_degree).dense() {
        writeln!(s, "  H^{d} = {g}").unwrap();
    }
    s
}

pub fn kawasaki_latex(ring: &KawasakiRing) -> String {
    let mut s = String::new();
    let n = ring.dim();
    writeln!(s, "\\begin{{array}}{{c||c|c|}}").unwrap();
    writeln!(
        s,
        "\\cup & \\mbox{{coefficient}} & \\mbox{{product}} \\\\ \\hline\\hline"
    )
    .unwrap();
    for p in ring.product_table() {
        let rhs = match p.target {
            Some(t) if p.coefficient == BigUint::from(1u32) => format!("\\gamma_{{{t}}}"),
            Some(t) => format!("{}\\gamma_{{{t}}}", p.coefficient),
            None => "0".into(),
        };
        writeln!(
            s,
            "\\gamma_{{{}}}\\gamma_{{{}}} & {} & {rhs} \\\\ \\hline",
            p.left, p.right, p.coefficient
        )
        .unwrap();
    }
    writeln!(s, "\\end{{array}}").unwrap();
    let ells: Vec<String> = ring.ell_table()[1..]
        .iter()
        .map(|l| l.to_string())
        .collect();
    writeln!(s, "% l_1..l_{n} = {}", ells.join(", ")).unwrap();
    s
}

// ---------------------------------------------------------------------------
// Orbifold ring

pub fn orbifold_json(ring: &OrbifoldRing, max_degree: u32) -> Value {
    let kaw = KawasakiRing::new(ring.weights().clone());
    let images: Vec<Value> = (1..=kaw.dim())
        .map(|k| {
            let img = kaw
                .qstar(ring, &kaw.gamma(k).expect("index in range"))
                .expect("same weights");
            json!({"generator": format!("g{k}"), "image": img.to_string()})
        })
        .collect();
    json!({
        "weights": weights_json(ring.weights()),
        "relation": {
            "coefficient": big_json(ring.relation_coefficient()),
            "exponent": ring.relation_exponent(),
        },
        "groups": graded_json(&ring.groups(max_degree)),
        "qstar": images,
    })
}

pub fn orbifold_text(ring: &OrbifoldRing, max_degree: u32) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "Orbifold cohomology of [CP^{}_{}]",
        ring.weights().dim(),
        ring.weights()
    )
    .unwrap();
    writeln!(s, "ring: {ring}").unwrap();
    writeln!(
        s,
        "relation: {}",
        euler_poly(ring.relation_coefficient(), ring.relation_exponent())
    )
    .unwrap();
    writeln!(s, "q* images:").unwrap();
    let kaw = KawasakiRing::new(ring.weights().clone());
    for k in 1..=kaw.dim() {
        let img = kaw
            .qstar(ring, &kaw.gamma(k).expect("index"))
            .expect("same weights");
        writeln!(s, "  q*(g{k}) = {img}").unwrap();
    }
    writeln!(s, "groups:").unwrap();
    for (d, g) in ring.groups(max_degree).dense() {
        writeln!(s, "  H^{d} = {g}").unwrap();
    }
    s
}

pub fn orbifold_latex(ring: &OrbifoldRing) -> String {
    format!(
        "\\frac{{\\mathbb{{Z}}[u]}}{{\\langle {} \\rangle}}\n",
        euler_latex(ring.relation_coefficient(), ring.relation_exponent())
    )
}

// ---------------------------------------------------------------------------
// Chen-Ruan ring

/// The sector chart laid out as rows of cells: header, fixed loci, one
/// rotation row per distinct weight, twice the age, generator, Euler class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorTable {
    pub sectors: Vec<usize>,
    /// Description of the fixed subspace of each sector, e.g. `3C_(3)`.
    pub fixed_loci: Vec<String>,
    /// `(weight, a_k(j) for each sector)` for each distinct weight.
    pub rotation_rows: Vec<(u64, Vec<Rational>)>,
    pub degree_shifts: Vec<Rational>,
    pub euler_classes: Vec<(BigUint, u32)>,
}

fn distinct_weights(w: &WeightVector) -> Vec<u64> {
    let mut ws = w.weights().to_vec();
    ws.sort_unstable();
    ws.dedup();
    ws
}

/// Groups the fixed coordinates by weight: `(weight, multiplicity)`.
fn fixed_by_weight(w: &WeightVector, s: &SectorData) -> Vec<(u64, usize)> {
    distinct_weights(w)
        .into_iter()
        .map(|b| (b, s.fixed.iter().filter(|&&k| w.weight(k) == b).count()))
        .filter(|&(_, m)| m > 0)
        .collect()
}

fn fixed_locus_text(w: &WeightVector, s: &SectorData) -> String {
    if s.fixed.is_empty() {
        return "{0}".into();
    }
    if s.fixed.len() == w.weights().len() {
        return format!("C^{}", w.weights().len());
    }
    fixed_by_weight(w, s)
        .into_iter()
        .map(|(b, m)| {
            if m == 1 {
                format!("C_({b})")
            } else {
                format!("{m}C_({b})")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn fixed_locus_latex(w: &WeightVector, s: &SectorData) -> String {
    if s.fixed.is_empty() {
        return "\\{ 0\\}".into();
    }
    if s.fixed.len() == w.weights().len() {
        return format!("{{\\mathbb{{C}}}}^{{{}}}", w.weights().len());
    }
    fixed_by_weight(w, s)
        .into_iter()
        .map(|(b, m)| {
            let mult = if m == 1 { String::new() } else { m.to_string() };
            format!("{mult}{{\\mathbb{{C}}}}_{{({b})}}")
        })
        .collect::<Vec<_>>()
        .join(" \\oplus ")
}

pub fn sector_table(ring: &CrRing) -> SectorTable {
    let w = ring.weights();
    let rotation_rows = distinct_weights(w)
        .into_iter()
        .map(|b| {
            let k = w
                .weights()
                .iter()
                .position(|&x| x == b)
                .expect("weight present");
            (
                b,
                ring.sectors()
                    .iter()
                    .map(|s| s.rotation[k].clone())
                    .collect(),
            )
        })
        .collect();
    SectorTable {
        sectors: (0..ring.ell()).collect(),
        fixed_loci: ring
            .sectors()
            .iter()
            .map(|s| fixed_locus_text(w, s))
            .collect(),
        rotation_rows,
        degree_shifts: ring
            .sectors()
            .iter()
            .map(|s| s.degree_shift.clone())
            .collect(),
        euler_classes: ring
            .sectors()
            .iter()
            .map(|s| (s.euler_coefficient.clone(), s.euler_exponent))
            .collect(),
    }
}

pub fn sector_table_text(ring: &CrRing) -> String {
    let t = sector_table(ring);
    let mut rows = Vec::new();
    let mut header = vec!["g".to_string()];
    header.extend(t.sectors.iter().map(|j| format!("zeta_{j}")));
    rows.push(header);
    let mut fixed = vec![format!("(C^{})^g", ring.weights().weights().len())];
    fixed.extend(t.fixed_loci.iter().cloned());
    rows.push(fixed);
    for (b, vals) in &t.rotation_rows {
        let mut row = vec![format!("a_C_({b})(g)")];
        row.extend(vals.iter().map(format_rational));
        rows.push(row);
    }
    let mut age = vec!["2*age(g)".to_string()];
    age.extend(t.degree_shifts.iter().map(format_rational));
    rows.push(age);
    let mut gens = vec!["generator".to_string()];
    gens.extend(t.sectors.iter().map(|j| format!("a{j}")));
    rows.push(gens);
    let mut euler = vec!["euler class".to_string()];
    euler.extend(
        t.euler_classes
            .iter()
            .map(|(c, d)| euler_poly(c, *d).to_string()),
    );
    rows.push(euler);
    align(&rows)
}

pub fn sector_table_latex(ring: &CrRing) -> String {
    let t = sector_table(ring);
    let w = ring.weights();
    let dim = w.weights().len();
    let mut s = String::new();
    writeln!(s, "\\begin{{array}}{{c||{}}}", "c|".repeat(t.sectors.len())).unwrap();
    let zetas: Vec<String> = t.sectors.iter().map(|j| format!("\\zeta_{j}")).collect();
    writeln!(s, "g & {} \\\\", zetas.join(" & ")).unwrap();
    let loci: Vec<String> = ring
        .sectors()
        .iter()
        .map(|x| fixed_locus_latex(w, x))
        .collect();
    writeln!(
        s,
        "\\hline\\hline ({{\\mathbb{{C}}}}^{{{dim}}})^g & {} \\\\ \\hline",
        loci.join(" & ")
    )
    .unwrap();
    for (b, vals) in &t.rotation_rows {
        let cells: Vec<String> = vals.iter().map(rational_latex).collect();
        writeln!(
            s,
            "{{a}}_{{{{\\mathbb{{C}}}}_{{({b})}}}}(g) & {} \\\\ \\hline",
            cells.join(" & ")
        )
        .unwrap();
    }
    let ages: Vec<String> = t.degree_shifts.iter().map(rational_latex).collect();
    writeln!(
        s,
        "2\\cdot\\mathrm{{age}}(g) & {} \\\\ \\hline",
        ages.join(" & ")
    )
    .unwrap();
    let gens: Vec<String> = t.sectors.iter().map(|j| format!("\\alpha_{j}")).collect();
    writeln!(
        s,
        "\\genfrac{{}}{{}}{{0pt}}{{0}}{{\\mbox{{generator of}}}}{{H_{{S^1_{{(b)}}}}^*(({{\\mathbb{{C}}}}^{{{dim}}})^g;{{\\mathbb{{Z}}}})}} & {} \\\\ \\hline",
        gens.join(" & ")
    )
    .unwrap();
    let eulers: Vec<String> = t
        .euler_classes
        .iter()
        .map(|(c, d)| euler_latex(c, *d))
        .collect();
    writeln!(
        s,
        "e_{{S^1_{{(b)}}}}(({{\\mathbb{{C}}}}^{{{dim}}})^g) & {} \\\\ \\hline",
        eulers.join(" & ")
    )
    .unwrap();
    writeln!(s, "\\end{{array}}").unwrap();
    s
}

fn monomial_latex(m: &CrMonomial) -> String {
    let mut out = String::new();
    let one = BigInt::from(1);
    let has_rest = m.u_exp > 0 || m.sector > 0;
    if m.coefficient != one || !has_rest {
        out.push_str(&m.coefficient.to_string());
    }
    match m.u_exp {
        0 => {}
        1 => out.push('u'),
        e => write!(out, "u^{{{e}}}").unwrap(),
    }
    if m.sector > 0 {
        write!(out, "\\alpha_{{{}}}", m.sector).unwrap();
    }
    out
}

pub fn multtable_text(ring: &CrRing) -> Result<String> {
    let mut s = String::new();
    for e in ring.mult_table()? {
        writeln!(s, "a{} * a{} = {}", e.left, e.right, e.value).unwrap();
    }
    if s.is_empty() {
        s.push_str("(no twisted sectors to multiply)\n");
    }
    Ok(s)
}

/// Upper-triangular star table over the live twisted sectors.
pub fn multtable_latex(ring: &CrRing) -> Result<String> {
    let live = ring.live_twisted_sectors();
    let mut s = String::new();
    writeln!(s, "\\begin{{array}}{{c||{}}}", "c|".repeat(live.len())).unwrap();
    let head: Vec<String> = live.iter().map(|j| format!("\\alpha_{j}")).collect();
    writeln!(s, "\\star & {} \\\\ \\hline \\hline", head.join(" & ")).unwrap();
    for (row, &i) in live.iter().enumerate() {
        let mut cells = Vec::new();
        for (col, &j) in live.iter().enumerate() {
            if col < row {
                cells.push(String::new());
                continue;
            }
            let raw = ring.star_raw(i, j)?;
            let reduced = ring.from_monomial(&raw);
            let cell = if reduced.is_zero() && raw.sector != 0 {
                format!("{}=0", monomial_latex(&raw))
            } else if reduced.is_zero() {
                "0".to_string()
            } else {
                monomial_latex(&raw)
            };
            cells.push(cell);
        }
        writeln!(s, "\\alpha_{i} & {} \\\\ \\hline", cells.join(" & ")).unwrap();
    }
    writeln!(s, "\\end{{array}}").unwrap();
    Ok(s)
}

pub fn presentation_text(ring: &CrRing) -> Result<String> {
    let p = ring.presentation()?;
    let mut s = String::new();
    let gens: Vec<String> = p
        .generators
        .iter()
        .map(|(name, d)| format!("{name} (deg {})", format_rational(d)))
        .collect();
    writeln!(s, "generators: {}", gens.join(", ")).unwrap();
    let kernel: Vec<String> = p.kernel.iter().map(ToString::to_string).collect();
    writeln!(s, "J: <{}>", kernel.join(", ")).unwrap();
    let products: Vec<String> = p.products.iter().map(|e| e.relation_string()).collect();
    writeln!(s, "I: <{}>", products.join(", ")).unwrap();
    Ok(s)
}

pub fn presentation_latex(ring: &CrRing) -> Result<String> {
    let p = ring.presentation()?;
    let alphas: Vec<String> = (0..ring.ell())
        .map(|j| format!("\\alpha_{{{j}}}"))
        .collect();
    let kernel: Vec<String> = p.kernel.iter().map(monomial_latex).collect();
    Ok(format!(
        "\\frac{{{{\\mathbb{{Z}}}}[u,{}]}}{{\\mathcal{{I}}+\\left\\langle {} \\right\\rangle}}\n",
        alphas.join(","),
        kernel.join(", ")
    ))
}

pub fn chenruan_json(ring: &CrRing, max_degree: &Rational, with_multtable: bool) -> Result<Value> {
    let p = ring.presentation()?;
    let sectors: Vec<Value> = ring
        .sectors()
        .iter()
        .map(|s| {
            json!({
                "j": s.index,
                "a": s.rotation.iter().map(rational_json).collect::<Vec<_>>(),
                "fixed": s.fixed,
                "euler": {
                    "coefficient": big_json(&s.euler_coefficient),
                    "exponent": s.euler_exponent,
                },
                "degree_shift": rational_json(&s.degree_shift),
            })
        })
        .collect();
    let mut out = json!({
        "weights": weights_json(ring.weights()),
        "ell": ring.ell(),
        "sectors": sectors,
        "generators": p.generators.iter()
            .map(|(name, d)| json!({"name": name, "degree": rational_json(d)}))
            .collect::<Vec<_>>(),
        "relations": {
            "J": p.kernel.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "I": p.products.iter().map(|e| e.relation_string()).collect::<Vec<_>>(),
        },
        "groups": rational_graded_json(&ring.graded_dimensions(max_degree)),
    });
    if with_multtable {
        let table: Vec<Value> = ring
            .mult_table()?
            .iter()
            .map(|e| {
                json!({
                    "left": e.left,
                    "right": e.right,
                    "raw": e.raw.to_string(),
                    "product": e.value.to_string(),
                })
            })
            .collect();
        out["multiplication_table"] = Value::Array(table);
    }
    Ok(out)
}

pub fn cr_groups_text(ring: &CrRing, max_degree: &Rational) -> String {
    let mut s = String::new();
    writeln!(s, "groups (up to degree {}):", format_rational(max_degree)).unwrap();
    for (d, g) in ring.graded_dimensions(max_degree).iter() {
        writeln!(s, "  H^{} = {g}", format_rational(d)).unwrap();
    }
    s
}

// ---------------------------------------------------------------------------
// Kunneth

pub fn kunneth_json(p: &ProductGroups, witness: Option<(u32, FgAbGroup)>) -> Value {
    json!({
        "weights": [weights_json(p.factors.0.weights()), weights_json(p.factors.1.weights())],
        "groups": graded_json(&p.groups),
        "odd_torsion_witness": witness.map(|(d, g)| json!({"degree": d, "group": group_json(&g)})),
    })
}

pub fn kunneth_text(p: &ProductGroups, witness: Option<(u32, FgAbGroup)>) -> String {
    let mut s = String::new();
    writeln!(
        s,
        "Kunneth groups of [CP_{} x CP_{}]",
        p.factors.0.weights(),
        p.factors.1.weights()
    )
    .unwrap();
    for (d, g) in p.groups.dense() {
        writeln!(s, "  H^{d} = {g}").unwrap();
    }
    match witness {
        Some((d, g)) => writeln!(s, "first odd degree with torsion: {d} ({g})").unwrap(),
        None => writeln!(s, "first odd degree with torsion: none").unwrap(),
    }
    s
}

pub fn kunneth_latex(p: &ProductGroups) -> String {
    let mut s = String::new();
    writeln!(s, "\\begin{{array}}{{c|c}}").unwrap();
    writeln!(s, "d & H^d \\\\ \\hline").unwrap();
    for (d, g) in p.groups.dense() {
        let cell = if g.is_zero() {
            "0".to_string()
        } else {
            let mut parts = Vec::new();
            match g.free_rank() {
                0 => {}
                1 => parts.push("\\mathbb{Z}".to_string()),
                r => parts.push(format!("\\mathbb{{Z}}^{{{r}}}")),
            }
            parts.extend(g.torsion().iter().map(|t| format!("\\mathbb{{Z}}/{t}")));
            parts.join(" \\oplus ")
        };
        writeln!(s, "{d} & {cell} \\\\").unwrap();
    }
    writeln!(s, "\\end{{array}}").unwrap();
    s
}
