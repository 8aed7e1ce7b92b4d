//! File formats, the scenario runner and the command-line front end for
//! `modrep-core`.

pub mod expr;
pub mod specfile;
pub mod suite;
