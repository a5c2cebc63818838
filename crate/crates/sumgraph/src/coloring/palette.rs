//! Fixed export palette: the twelve names used by the colored drawings,
//! extended by a golden-ratio hue rotation (as graphviz HSV triples) for
//! indices beyond twelve.

const NAMES: [&str; 12] = [
    "gray", "orange", "cyan", "purple", "blue", "green", "brown", "violet", "magenta", "red",
    "olive", "black",
];

/// The export color for the 1-based index `j`.
pub fn color_name(j: usize) -> String {
    assert!(j >= 1, "color indices are 1-based");
    if j <= NAMES.len() {
        NAMES[j - 1].to_string()
    } else {
        let hue = ((j - NAMES.len()) as f64 * 0.618_033_988_749_895).fract();
        format!("{hue:.3} 0.750 0.850")
    }
}
