pub mod battery;
pub mod catalog;
pub mod cyclotomic;
pub mod fusion_ring;
pub mod io;
pub mod linalg;
pub mod modular;
pub mod report;
pub mod tordet;
