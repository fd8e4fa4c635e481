//! Definition language.
