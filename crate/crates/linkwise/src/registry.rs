//! Protocol and chipset parameter registry.
//!
//! Ships an embedded default set of six wireless protocols (Bluetooth, UWB,
//! ZigBee, Wi-Fi, Wi-Max, GPRS) with their rate/payload/overhead/frequency/
//! power parameters and one representative transceiver chipset each. A
//! user-supplied registry document can override or extend the defaults; see
//! `data/protocols.tsv` for the wire format.

use crate::error::{Error, Result};
use crate::rational::{format_rational, is_negative, parse_rational, to_f64, Rational};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT_M_S: f64 = 299_792_458.0;

/// Inclusive bound on |bit_time × data_rate − 1|. The registry defaults
/// include one row that sits exactly on the 1% boundary, so the check
/// carries a small absolute guard against the f64 rounding of the product.
pub const RECIPROCITY_TOLERANCE: f64 = 0.01;
const RECIPROCITY_GUARD: f64 = 1e-12;

/// One wireless protocol's link parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProtocolSpec {
    pub name: String,
    /// Peak air data rate, Mb/s.
    pub max_data_rate_mbps: f64,
    /// Time on air per bit, microseconds.
    pub bit_time_us: f64,
    /// Largest data payload per packet, bytes.
    pub max_payload_bytes: u64,
    /// Per-packet framing overhead, bytes (exact rational).
    #[serde(serialize_with = "serialize_rational")]
    pub overhead_bytes: Rational,
    /// Carrier frequency, Hz.
    pub carrier_frequency_hz: f64,
    /// Rated transmit power, W.
    pub tx_power_w: f64,
    /// Maximum node count of one basic cell.
    pub max_cell_nodes: u64,
    /// Basic cell topology, free text.
    pub basic_cell: String,
    /// How the basic cell extends, free text.
    pub cell_extension: String,
    /// Free-text remark carried with the entry.
    pub note: Option<String>,
}

fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Rational", 3)?;
    st.serialize_field("text", &format_rational(r))?;
    st.serialize_field("numer", r.numer())?;
    st.serialize_field("denom", r.denom())?;
    st.end()
}

impl ProtocolSpec {
    /// Carrier wavelength, meters.
    pub fn wavelength_m(&self) -> f64 {
        SPEED_OF_LIGHT_M_S / self.carrier_frequency_hz
    }

    /// Per-packet overhead as `f64` bytes.
    pub fn overhead_bytes_f64(&self) -> f64 {
        to_f64(&self.overhead_bytes)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |rule: &str| {
            Err(Error::Validation {
                subject: self.name.clone(),
                rule: rule.to_string(),
            })
        };
        if self.name.trim().is_empty() {
            return fail("protocol name must not be empty");
        }
        if !(self.max_data_rate_mbps > 0.0) {
            return fail("max_data_rate_mbps must be > 0");
        }
        if !(self.bit_time_us > 0.0) {
            return fail("bit_time_us must be > 0");
        }
        if self.max_payload_bytes < 1 {
            return fail("max_payload_bytes must be >= 1");
        }
        if is_negative(&self.overhead_bytes) {
            return fail("overhead_bytes must be >= 0");
        }
        if !(self.carrier_frequency_hz > 0.0) {
            return fail("carrier_frequency_hz must be > 0");
        }
        if !(self.tx_power_w > 0.0) {
            return fail("tx_power_w must be > 0");
        }
        let recip = self.bit_time_us * self.max_data_rate_mbps;
        if (recip - 1.0).abs() - RECIPROCITY_TOLERANCE > RECIPROCITY_GUARD {
            return fail(
                "bit_time_us x max_data_rate_mbps must equal 1 within 1% \
                 (bit time is the reciprocal of the data rate)",
            );
        }
        Ok(())
    }
}

/// Power-consumption characteristics of a representative chipset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChipsetSpec {
    pub protocol_name: String,
    pub chipset_name: String,
    /// Supply voltage V_dd, volts.
    pub supply_voltage_v: f64,
    /// Transmit current, milliamperes.
    pub tx_current_ma: f64,
    /// Receive current, milliamperes.
    pub rx_current_ma: f64,
    /// Chipset bit rate, Mb/s (may differ from the protocol's peak rate).
    pub bit_rate_mbps: f64,
}

impl ChipsetSpec {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("supply_voltage_v", self.supply_voltage_v),
            ("tx_current_ma", self.tx_current_ma),
            ("rx_current_ma", self.rx_current_ma),
            ("bit_rate_mbps", self.bit_rate_mbps),
        ];
        for (field, v) in fields {
            if !(v > 0.0) {
                return Err(Error::Validation {
                    subject: format!("{} ({})", self.chipset_name, self.protocol_name),
                    rule: format!("{field} must be > 0"),
                });
            }
        }
        Ok(())
    }
}

/// A protocol together with its optional chipset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegistryEntry {
    pub protocol: ProtocolSpec,
    pub chipset: Option<ChipsetSpec>,
}

/// Validated, ordered protocol set. Immutable once loaded; lookups are
/// case-insensitive. Safe to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolRegistry {
    entries: Vec<RegistryEntry>,
}

const EMBEDDED_DOCUMENT: &str = include_str!("../data/protocols.tsv");

/// Load a registry: `None` loads the embedded defaults, `Some(doc)` parses
/// the document and merges it over the defaults (same-named entries replace
/// the default, new names append).
pub fn load_registry(source: Option<&str>) -> Result<ProtocolRegistry> {
    match source {
        None => ProtocolRegistry::defaults_checked(),
        Some(doc) => ProtocolRegistry::from_document(doc),
    }
}

impl ProtocolRegistry {
    /// The six embedded default protocols.
    pub fn defaults() -> Self {
        Self::defaults_checked().expect("embedded default registry is valid")
    }

    fn defaults_checked() -> Result<Self> {
        let entries = parse_document(EMBEDDED_DOCUMENT)?;
        Self::from_entries(entries)
    }

    /// Defaults overridden/extended by a user document.
    pub fn from_document(doc: &str) -> Result<Self> {
        let mut registry = Self::defaults_checked()?;
        for entry in parse_document(doc)? {
            registry.upsert(entry);
        }
        Ok(registry)
    }

    fn from_entries(entries: Vec<RegistryEntry>) -> Result<Self> {
        let mut registry = ProtocolRegistry {
            entries: Vec::new(),
        };
        for entry in entries {
            if registry.lookup(&entry.protocol.name).is_some() {
                return Err(Error::Validation {
                    subject: entry.protocol.name.clone(),
                    rule: "duplicate protocol name (lookup is case-insensitive)".to_string(),
                });
            }
            registry.entries.push(entry);
        }
        Ok(registry)
    }

    /// Replace a same-named entry in place (keeping its position) or append.
    fn upsert(&mut self, entry: RegistryEntry) {
        match self.position(&entry.protocol.name) {
            Some(i) => self.entries[i] = entry,
            None => self.entries.push(entry),
        }
    }

    fn position(&self, name: &str) -> Option<usize> {
        let key = name.to_lowercase();
        self.entries
            .iter()
            .position(|e| e.protocol.name.to_lowercase() == key)
    }

    fn lookup(&self, name: &str) -> Option<&RegistryEntry> {
        self.position(name).map(|i| &self.entries[i])
    }

    /// Case-insensitive protocol lookup; unknown names list what is available.
    pub fn get(&self, name: &str) -> Result<&ProtocolSpec> {
        self.get_entry(name).map(|e| &e.protocol)
    }

    pub fn get_entry(&self, name: &str) -> Result<&RegistryEntry> {
        self.lookup(name).ok_or_else(|| Error::UnknownProtocol {
            name: name.to_string(),
            available: self.names(),
        })
    }

    pub fn chipset(&self, name: &str) -> Option<&ChipsetSpec> {
        self.lookup(name).and_then(|e| e.chipset.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &RegistryEntry> {
        self.entries.iter()
    }

    pub fn names(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| e.protocol.name.clone())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Serialize back to the registry wire format. Reloading the output
    /// yields an identical registry.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        out.push_str("# Protocol registry.\n");
        out.push_str("# name, max_data_rate_mbps, bit_time_us, max_payload_bytes, overhead_bytes,\n");
        out.push_str("# carrier_frequency_hz, tx_power_w, max_cell_nodes, basic_cell, cell_extension,\n");
        out.push_str("# then optional `note=` and `chipset=name,V_dd,I_tx_mA,I_rx_mA,rate_Mbps`.\n");
        for entry in &self.entries {
            let p = &entry.protocol;
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                p.name,
                p.max_data_rate_mbps,
                p.bit_time_us,
                p.max_payload_bytes,
                format_rational(&p.overhead_bytes),
                p.carrier_frequency_hz,
                p.tx_power_w,
                p.max_cell_nodes,
                p.basic_cell,
                p.cell_extension,
            ));
            if let Some(note) = &p.note {
                out.push_str(&format!("\tnote={note}"));
            }
            if let Some(c) = &entry.chipset {
                out.push_str(&format!(
                    "\tchipset={},{},{},{},{}",
                    c.chipset_name,
                    c.supply_voltage_v,
                    c.tx_current_ma,
                    c.rx_current_ma,
                    c.bit_rate_mbps
                ));
            }
            out.push('\n');
        }
        out
    }
}

fn parse_document(doc: &str) -> Result<Vec<RegistryEntry>> {
    let mut entries = Vec::new();
    for (idx, raw) in doc.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end();
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        entries.push(parse_record(line, line_no)?);
    }
    Ok(entries)
}

fn parse_record(line: &str, line_no: usize) -> Result<RegistryEntry> {
    let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
    if fields.len() < 10 {
        return Err(Error::Parse {
            line: line_no,
            field: "record".to_string(),
            message: format!("expected 10 tab-separated fields, found {}", fields.len()),
        });
    }

    let parse_f64 = |field: &str, value: &str| -> Result<f64> {
        value.parse::<f64>().map_err(|_| Error::Parse {
            line: line_no,
            field: field.to_string(),
            message: format!("`{value}` is not a number"),
        })
    };
    let parse_u64 = |field: &str, value: &str| -> Result<u64> {
        value.parse::<u64>().map_err(|_| Error::Parse {
            line: line_no,
            field: field.to_string(),
            message: format!("`{value}` is not a nonnegative integer"),
        })
    };

    let name = fields[0].to_string();
    let overhead_bytes = parse_rational(fields[4]).ok_or_else(|| Error::Parse {
        line: line_no,
        field: "overhead_bytes".to_string(),
        message: format!("`{}` is not a rational (`a/b`, integer or decimal)", fields[4]),
    })?;

    let mut note = None;
    let mut chipset = None;
    for extra in &fields[10..] {
        if extra.is_empty() {
            continue;
        }
        let (key, value) = extra.split_once('=').ok_or_else(|| Error::Parse {
            line: line_no,
            field: "extras".to_string(),
            message: format!("`{extra}` is not a `key=value` field"),
        })?;
        match key {
            "note" => note = Some(value.to_string()),
            "chipset" => chipset = Some(parse_chipset(value, &name, line_no)?),
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    field: other.to_string(),
                    message: "unknown optional field (expected `note` or `chipset`)".to_string(),
                })
            }
        }
    }

    let protocol = ProtocolSpec {
        name,
        max_data_rate_mbps: parse_f64("max_data_rate_mbps", fields[1])?,
        bit_time_us: parse_f64("bit_time_us", fields[2])?,
        max_payload_bytes: parse_u64("max_payload_bytes", fields[3])?,
        overhead_bytes,
        carrier_frequency_hz: parse_f64("carrier_frequency_hz", fields[5])?,
        tx_power_w: parse_f64("tx_power_w", fields[6])?,
        max_cell_nodes: parse_u64("max_cell_nodes", fields[7])?,
        basic_cell: fields[8].to_string(),
        cell_extension: fields[9].to_string(),
        note,
    };
    protocol.validate()?;
    if let Some(c) = &chipset {
        c.validate()?;
    }
    Ok(RegistryEntry { protocol, chipset })
}

fn parse_chipset(value: &str, protocol: &str, line_no: usize) -> Result<ChipsetSpec> {
    let parts: Vec<&str> = value.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(Error::Parse {
            line: line_no,
            field: "chipset".to_string(),
            message: format!(
                "expected `name,V_dd,I_tx_mA,I_rx_mA,rate_Mbps`, found {} fields",
                parts.len()
            ),
        });
    }
    let num = |field: &str, v: &str| -> Result<f64> {
        v.parse::<f64>().map_err(|_| Error::Parse {
            line: line_no,
            field: format!("chipset.{field}"),
            message: format!("`{v}` is not a number"),
        })
    };
    Ok(ChipsetSpec {
        protocol_name: protocol.to_string(),
        chipset_name: parts[0].to_string(),
        supply_voltage_v: num("supply_voltage_v", parts[1])?,
        tx_current_ma: num("tx_current_ma", parts[2])?,
        rx_current_ma: num("rx_current_ma", parts[3])?,
        bit_rate_mbps: num("bit_rate_mbps", parts[4])?,
    })
}
