#pragma once

#include <json.hpp>

#include "syrt/endo.hpp"
#include "syrt/hecke.hpp"
#include "syrt/qsym.hpp"

namespace syrt {

using Json = nlohmann::json;

// Wire formats. Cells serialize as [col,row]; tableau rows are listed
// bottom-to-top; keys come out sorted (nlohmann's default object ordering).

Json to_json(const Composition& alpha);
Json to_json(Cell cell);
Json to_json(const ThreadDecomposition& decomposition);
Json to_json(const Tableau& tableau);
Json to_json(const Syrt& tableau);
Json to_json(const QSymElement& element);
Json to_json(const HeckeAction& action);
Json to_json(const SeriesResult& series, const HeckeAction& action);
Json to_json(const EndoReport& report);

std::string dump_sorted(const Json& value);  // pretty, trailing newline

}  // namespace syrt
