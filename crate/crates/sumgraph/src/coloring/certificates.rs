//! Explicit edge color classes for the three interval families with known
//! chromatic index: `G_{0,s}`, `G_{-1,s}` and `G_{-s,s}`.
//!
//! The `G_{-s,s}` lists are transcriptions stored as data files, loaded as
//! printed. Whether a transcription actually is a proper cover is decided by
//! the verifier, so printing defects surface as verification reports instead
//! of being patched here.

use crate::error::{Error, Result};
use crate::graph::Edge;

use super::ColorCertificate;

/// The `s` color classes of `G_{0,s}`: class `k` collects the pairs
/// `(a, k-a)` with `0 <= a < k-a`. Together with `Delta = s` this pins
/// `chi'(G_{0,s}) = s`.
pub fn certificate_g0s(s: i64) -> Result<ColorCertificate> {
    if s < 1 {
        return Err(Error::domain(format!(
            "G_(0,s) certificate needs s >= 1, got {s}"
        )));
    }
    let classes = (1..=s)
        .map(|k| {
            (0..)
                .take_while(|&a| a < k - a)
                .map(|a| Edge::new(a, k - a).expect("a < k - a"))
                .collect()
        })
        .collect();
    Ok(ColorCertificate::new(classes))
}

/// The `s + 1` color classes of `G_{-1,s}` (`s >= 2`): for `k < s` class `k`
/// is `{(0,k), (-1,k+1)}` plus the positive pairs summing to `k`; class `s`
/// is `{(0,s), (-1,1)}`; class `s+1` is `{(0,-1)}` plus the positive pairs
/// summing to `s`.
pub fn certificate_g_minus1_s(s: i64) -> Result<ColorCertificate> {
    if s < 2 {
        return Err(Error::domain(format!(
            "G_(-1,s) certificate needs s >= 2, got {s}"
        )));
    }
    let positive_pairs = |total: i64| {
        (1..)
            .take_while(move |&a| a < total - a)
            .map(move |a| Edge::new(a, total - a).expect("a < total - a"))
    };
    let mut classes: Vec<Vec<Edge>> = Vec::with_capacity(s as usize + 1);
    for k in 1..s {
        let mut class = vec![Edge::new(0, k)?, Edge::new(-1, k + 1)?];
        class.extend(positive_pairs(k));
        classes.push(class);
    }
    classes.push(vec![Edge::new(0, s)?, Edge::new(-1, 1)?]);
    let mut last = vec![Edge::new(-1, 0)?];
    last.extend(positive_pairs(s));
    classes.push(last);
    Ok(ColorCertificate::new(classes))
}

/// The transcribed class list of order `2s` for `G_{-s,s}`, `2 <= s <= 6`,
/// exactly as printed. Run it through the verifier before trusting it.
pub fn certificate_g_ss(s: i64) -> Result<ColorCertificate> {
    let doc = match s {
        2 => include_str!("../../data/certificate_g_minus2_2.json"),
        3 => include_str!("../../data/certificate_g_minus3_3.json"),
        4 => include_str!("../../data/certificate_g_minus4_4.json"),
        5 => include_str!("../../data/certificate_g_minus5_5.json"),
        6 => include_str!("../../data/certificate_g_minus6_6.json"),
        _ => {
            return Err(Error::domain(format!(
                "G_(-s,s) class lists exist for 2 <= s <= 6 only, got {s}"
            )))
        }
    };
    ColorCertificate::from_json(doc)
}
