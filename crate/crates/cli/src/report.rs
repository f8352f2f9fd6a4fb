//! Rendering of analysis results. Every command that reads a structure file
//! offers the same report in two shapes: JSON with a fixed key set for
//! machines, and a text form for people. Both are produced from the same
//! underlying objects; JSON identifies elements and operations by index,
//! with the `elements` array giving the index-to-name mapping, while text
//! substitutes the document's own names.

use gsg_core::nrel::EqRelation;
use gsg_core::regularity::{self, StrongWitness};
use gsg_core::structure::OrderedGammaStructure;
use gsg_core::substructs::filter_generated;
use gsg_core::theorem::ConditionReport;
use serde_json::{json, Value};

use crate::doc::StructureDocument;

fn names_json(doc: &StructureDocument) -> Value {
    json!(doc.elements())
}

/// The `check` envelope. `consistent` is present only for full runs, where
/// agreement across conditions is the point; a single-condition report
/// stands alone.
pub fn check_json(
    doc: &StructureDocument,
    reports: &[ConditionReport],
    consistent: Option<bool>,
) -> Value {
    let mut envelope = json!({
        "elements": names_json(doc),
        "reports": reports,
    });
    if let Some(flag) = consistent {
        envelope["consistent"] = json!(flag);
    }
    envelope
}

pub fn check_text(
    doc: &StructureDocument,
    reports: &[ConditionReport],
    consistent: Option<bool>,
) -> String {
    let mut out = format!("elements: {}\n", doc.elements().join(" "));
    for report in reports {
        if report.holds {
            out.push_str(&format!("{} holds\n", report.id));
        } else {
            out.push_str(&format!("{} fails\n", report.id));
            for failure in &report.failures {
                out.push_str(&format!(
                    "  {}: {}\n",
                    doc.elements()[failure.element],
                    failure.reason
                ));
            }
        }
    }
    if let Some(flag) = consistent {
        out.push_str(&format!(
            "consistent: {}\n",
            if flag { "yes" } else { "no" }
        ));
    }
    out
}

/// Everything `classify` reports: the five regularity flags plus the
/// per-element strong witnesses (null where none exists).
pub struct Classification {
    pub regular: bool,
    pub left_regular: bool,
    pub right_regular: bool,
    pub completely_regular: bool,
    pub strongly_regular: bool,
    pub witnesses: Vec<Option<StrongWitness>>,
}

pub fn classify(s: &OrderedGammaStructure) -> Classification {
    let witnesses = regularity::strong_witness_table(s);
    Classification {
        regular: regularity::is_regular(s),
        left_regular: regularity::is_left_regular(s),
        right_regular: regularity::is_right_regular(s),
        completely_regular: regularity::is_completely_regular(s),
        strongly_regular: witnesses.iter().all(Option::is_some),
        witnesses,
    }
}

pub fn classify_json(doc: &StructureDocument, c: &Classification) -> Value {
    json!({
        "elements": names_json(doc),
        "regular": c.regular,
        "left_regular": c.left_regular,
        "right_regular": c.right_regular,
        "completely_regular": c.completely_regular,
        "strongly_regular": c.strongly_regular,
        "witnesses": c.witnesses,
    })
}

pub fn classify_text(doc: &StructureDocument, c: &Classification) -> String {
    let yn = |b: bool| if b { "yes" } else { "no" };
    let mut out = format!("elements: {}\n", doc.elements().join(" "));
    out.push_str(&format!("regular: {}\n", yn(c.regular)));
    out.push_str(&format!("left-regular: {}\n", yn(c.left_regular)));
    out.push_str(&format!("right-regular: {}\n", yn(c.right_regular)));
    out.push_str(&format!("completely-regular: {}\n", yn(c.completely_regular)));
    out.push_str(&format!("strongly-regular: {}\n", yn(c.strongly_regular)));
    for (a, witness) in c.witnesses.iter().enumerate() {
        let name = &doc.elements()[a];
        match witness {
            Some(w) => out.push_str(&format!(
                "strong witness for {name}: x = {}, ops = ({}, {})\n",
                doc.elements()[w.x],
                doc.gammas()[w.op1],
                doc.gammas()[w.op2]
            )),
            None => out.push_str(&format!("strong witness for {name}: none\n")),
        }
    }
    out
}

pub fn nclasses_json(doc: &StructureDocument, s: &OrderedGammaStructure, rel: &EqRelation) -> Value {
    let classes: Vec<Value> = rel
        .classes()
        .iter()
        .map(|class| {
            let representative = class.iter().next().expect("classes are nonempty");
            json!({
                "members": class,
                "filter": filter_generated(s, representative),
            })
        })
        .collect();
    json!({
        "elements": names_json(doc),
        "classes": classes,
    })
}

pub fn nclasses_text(
    doc: &StructureDocument,
    s: &OrderedGammaStructure,
    rel: &EqRelation,
) -> String {
    let name_set = |elems: Vec<usize>| -> String {
        let names: Vec<&str> = elems.iter().map(|&e| doc.elements()[e].as_str()).collect();
        format!("{{{}}}", names.join(", "))
    };
    let mut out = format!("elements: {}\n", doc.elements().join(" "));
    for class in rel.classes() {
        let representative = class.iter().next().expect("classes are nonempty");
        let filter = filter_generated(s, representative);
        out.push_str(&format!(
            "class {}: least filter {}\n",
            name_set(class.elems()),
            name_set(filter.elems())
        ));
    }
    out
}
