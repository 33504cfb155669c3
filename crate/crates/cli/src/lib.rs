//! Library half of the command line tool: the named complex catalog, the
//! complex file format, and the report builders the binary prints.

pub mod catalog;
pub mod io;
pub mod render;
pub mod reports;
pub mod theorems;
