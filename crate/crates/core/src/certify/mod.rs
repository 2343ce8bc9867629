pub mod certificate;
pub mod ledger;
pub mod lemmas;
pub mod model;
pub mod pipeline;
