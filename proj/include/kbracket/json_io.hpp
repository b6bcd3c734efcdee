#ifndef KBRACKET_JSON_IO_HPP
#define KBRACKET_JSON_IO_HPP

#include <string>

#include "kbracket/bracket.hpp"
#include "kbracket/module_element.hpp"
#include "kbracket/web.hpp"

namespace kbracket {

/// {"sources":[...],"sinks":[...],"edges":[[s,t],...],"circles":n} with
/// sorted vertex lists and edge list.
std::string web_to_json(const Web& w);

/// Parses the same shape; edge order on input is irrelevant. Throws
/// Error("web.json") on malformed input and Error("web.invalid") when the
/// parsed web breaks an invariant.
Web web_from_json(const std::string& text);

std::string module_element_to_json(const ModuleElement& e);
std::string report_to_json(const BracketReport& r);
std::string certificate_to_json(const MinimalityCertificate& cert);

/// Plain structural DOT export (no layout hints beyond node shapes).
std::string web_to_dot(const Web& w);

} // namespace kbracket

#endif
