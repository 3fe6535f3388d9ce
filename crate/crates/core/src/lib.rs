//! Exact Schubert structure constants for Grassmannians of types A, B, C
//! and D, counted by Littlewood-Richardson and LR-Stembridge tableaux.
//!
//! ```
//! use schubert_lr::schubert_ring::SchubertRing;
//!
//! let ring = SchubertRing::new("B:n=3".parse().unwrap());
//! let s2 = ring.element(&"2".parse().unwrap()).unwrap();
//! assert_eq!(ring.multiply(&s2, &s2).unwrap().to_string(), "2*s[3,1]");
//! ```

pub mod cli;
pub mod error;
pub mod jdt;
pub mod lr_tableaux;
pub mod oracle;
pub mod schubert_ring;
pub mod shapes;
pub mod shifted;
pub mod tableau;
