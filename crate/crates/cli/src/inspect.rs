use std::io::Write;

use anyhow::{bail, Context};
use opal_core::free::{FreePermutative, LObject};
use opal_core::multicat::{FiniteMulticategory, Underlying};
use opal_core::operad::{DefaultKappa, YObject};
use opal_core::shapes::ZObject;
use opal_core::smc::h::{hom_dot, FreeSmc};
use opal_core::smc::{eval_can_iso, eval_obj, FiniteSmc};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::config::KappaChoice;

pub fn parse<T: DeserializeOwned>(what: &str, text: &str) -> anyhow::Result<T> {
    serde_json::from_str(text).with_context(|| format!("parsing {what}"))
}

fn lines<T: Serialize>(
    out: &mut impl Write,
    items: impl IntoIterator<Item = T>,
) -> anyhow::Result<()> {
    for item in items {
        writeln!(out, "{}", serde_json::to_value(&item)?)?;
    }
    Ok(())
}

pub fn hom_h(out: &mut impl Write, source: &str, target: &str, dot: bool) -> anyhow::Result<()> {
    let a: ZObject = parse("source object", source)?;
    let b: ZObject = parse("target object", target)?;
    if dot {
        write!(out, "{}", hom_dot(&[a, b]))?;
        return Ok(());
    }
    lines(out, FreeSmc.hom(&a, &b))
}

/// Arrows of `U_κH`, each tagged with its arity.
pub fn hom_u(
    out: &mut impl Write,
    sources: &str,
    target: &str,
    kappa: &KappaChoice,
) -> anyhow::Result<()> {
    let xs: Vec<ZObject> = parse("source tuple", sources)?;
    let y: ZObject = parse("target object", target)?;
    let m = Underlying::new(FreeSmc, kappa.build()?);
    let arity = xs.len();
    let tag = match arity {
        0 => "nullary",
        1 => "unary",
        _ => "multi",
    };
    lines(
        out,
        m.hom(&xs, &y)
            .into_iter()
            .map(|f| json!({"arity": arity, "kind": tag, "arrow": f})),
    )
}

/// Morphisms of `L U_κH` for the left-nested `κ`.
pub fn hom_l(out: &mut impl Write, source: &str, target: &str) -> anyhow::Result<()> {
    let a: LObject<ZObject> = parse("source list", source)?;
    let b: LObject<ZObject> = parse("target list", target)?;
    let m = Underlying::new(FreeSmc, DefaultKappa);
    let l = FreePermutative::new(&m);
    let count = l.hom_len(&a, &b);
    lines(
        out,
        (0..count).map(|i| l.hom_nth(&a, &b, i).expect("index below the count")),
    )
}

pub fn eval(out: &mut impl Write, y: &str, xs: &str, other: Option<&str>) -> anyhow::Result<()> {
    let y: YObject = parse("Y-object", y)?;
    let xs: Vec<ZObject> = parse("object tuple", xs)?;
    if y.arity() != xs.len() {
        bail!(
            "Y-object of arity {} applied to {} objects",
            y.arity(),
            xs.len()
        );
    }
    let value = match other {
        None => serde_json::to_value(eval_obj(&FreeSmc, &y, &xs)?)?,
        Some(text) => {
            let b: YObject = parse("second Y-object", text)?;
            if b.arity() != y.arity() {
                bail!("Y-objects of arities {} and {}", y.arity(), b.arity());
            }
            serde_json::to_value(eval_can_iso(&FreeSmc, &y, &b, &xs)?)?
        }
    };
    writeln!(out, "{value}")?;
    Ok(())
}

/// Every `H`-object up to the width and every hom-set between them.
pub fn export(out: &mut impl Write, max_width: usize, dot: bool) -> anyhow::Result<()> {
    let objects = ZObject::enumerate_up_to_width(max_width);
    if dot {
        write!(out, "{}", hom_dot(&objects))?;
        return Ok(());
    }
    let mut homs = Vec::new();
    for (i, a) in objects.iter().enumerate() {
        for (j, b) in objects.iter().enumerate() {
            let morphisms = FreeSmc.hom(a, b);
            if !morphisms.is_empty() {
                let perms: Vec<_> = morphisms.iter().map(|f| f.perm().clone()).collect();
                homs.push(json!({"source": i, "target": j, "perms": perms}));
            }
        }
    }
    let value = json!({"objects": objects, "homs": homs});
    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
    Ok(())
}
