#![allow(dead_code)]

use lattice_walks::WalkType;

/// Every type string over `a..e` with 1 to `max_dims` letters, canonical and
/// without repeats.
pub fn all_types(max_dims: usize) -> Vec<WalkType> {
    fn grow(prefix: &mut String, start: u8, left: usize, out: &mut Vec<WalkType>) {
        if !prefix.is_empty() {
            out.push(prefix.parse().unwrap());
        }
        if left == 0 {
            return;
        }
        for c in start..=b'e' {
            prefix.push(c as char);
            grow(prefix, c, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut String::new(), b'a', max_dims, &mut out);
    out
}

/// Valid rows of the classic length-4 listing that contain N/S steps.
pub const LENGTH4_VALID: [&str; 26] = [
    "NNSS", "NSNS", "NSEE", "NSEW", "NSWE", "NSWW", "NESE", "NESW", "NWSE", "NWSW", "NEES", "NEWS",
    "NWES", "NWWS", "ENSE", "ENSW", "WNSE", "WNSW", "ENES", "ENWS", "WNES", "WNWS", "EENS", "EWNS",
    "WENS", "WWNS",
];

/// Invalid rows with the indices of their underlined steps.
pub const LENGTH4_INVALID: [(&str, &[usize]); 28] = [
    ("NSSN", &[2]),
    ("SNNS", &[0]),
    ("SNEE", &[0]),
    ("SNEW", &[0]),
    ("SNWE", &[0]),
    ("SNWW", &[0]),
    ("SENE", &[0, 1]),
    ("SENW", &[0, 1]),
    ("SWNE", &[0, 1]),
    ("SWNW", &[0, 1]),
    ("SEEN", &[0, 1, 2]),
    ("SEWN", &[0, 1, 2]),
    ("SWEN", &[0, 1, 2]),
    ("SWWN", &[0, 1, 2]),
    ("SNSN", &[0, 2]),
    ("SSNN", &[0, 1, 2]),
    ("ESNE", &[1]),
    ("ESNW", &[1]),
    ("WSNE", &[1]),
    ("WSNW", &[1]),
    ("ESEN", &[1, 2]),
    ("ESWN", &[1, 2]),
    ("WSEN", &[1, 2]),
    ("WSWN", &[1, 2]),
    ("EESN", &[2]),
    ("EWSN", &[2]),
    ("WESN", &[2]),
    ("WWSN", &[2]),
];
