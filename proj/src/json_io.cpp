#include "ordwalk/json_io.hpp"

#include <string>

namespace ordwalk {

Json ordinal_list(const std::vector<Ordinal>& xs) {
  Json out = Json::array();
  for (const Ordinal& x : xs) out.push_back(format(x));
  return out;
}

std::vector<Ordinal> ordinals_from_json(const Json& j) {
  std::vector<Ordinal> out;
  for (const auto& item : j) out.push_back(parse(item.get<std::string>()));
  return out;
}

Json to_json(const WalkTrace& t) {
  Json j;
  j["alpha"] = format(t.alpha);
  j["beta"] = format(t.beta);
  j["points"] = ordinal_list(t.points);
  j["rho2"] = t.rho2();
  return j;
}

WalkTrace trace_from_json(const Json& j) {
  WalkTrace t{parse(j.at("alpha").get<std::string>()), parse(j.at("beta").get<std::string>()),
              ordinals_from_json(j.at("points"))};
  if (t.rho2() != j.at("rho2").get<Natural>()) {
    throw DomainError("trace record: rho2 disagrees with the point count");
  }
  return t;
}

Json to_json(const Separation& s) {
  Json j;
  j["beta"] = format(s.scheme.beta);
  Json cert = Json::object();
  for (const auto& [xi, n] : s.certificate) cert[format(xi)] = n;
  j["certificate"] = std::move(cert);
  return j;
}

Json to_json(const ConvergenceReport& r) {
  Json anchors = Json::array();
  for (const AnchorHistogram& h : r.anchors) {
    Json hist = Json::object();
    for (const auto& [value, count] : h.histogram) hist[std::to_string(value)] = count;
    anchors.push_back(Json{{"anchor", format(h.anchor)}, {"histogram", std::move(hist)}});
  }
  Json j;
  j["anchors"] = std::move(anchors);
  j["maxFiber"] = r.max_fiber;
  return j;
}

Json to_json(const CoherenceReport& r) {
  Json j;
  j["maxDelta"] = r.max_delta;
  j["argmax"] = format(r.argmax);
  return j;
}

}  // namespace ordwalk
