#ifndef OPDL_REPORT_IO_HPP
#define OPDL_REPORT_IO_HPP

#include <string>

#include "opdl/classify.hpp"

namespace opdl {

/// stable, byte-reproducible JSON rendering (schema in docs/report-schema.json)
std::string report_to_json(const ClassificationReport& rep);

/// human-readable summary walking the pipeline checkpoints
std::string report_to_markdown(const ClassificationReport& rep);

std::string certify_to_json(const CertifyResult& res, const std::vector<Rational>& point,
                            const std::string& system);
std::string certify_to_text(const CertifyResult& res, const std::vector<Rational>& point,
                            const std::string& system);

}  // namespace opdl

#endif
