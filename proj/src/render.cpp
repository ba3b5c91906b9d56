#include "theta/render.hpp"

#include <sstream>

#include "json.hpp"
#include "theta/errors.hpp"

namespace theta {

using json = nlohmann::json;

std::string render_half(HalfInt h) { return h.str(); }

std::string render_segment_dsl(const Segment& s, Form form) {
  std::string head = form == Form::Delta ? "D" : "Z";
  return head + "[" + s.a.str() + "," + s.b.str() + "]";
}

static std::string render_segment_pretty(const Segment& s, Form form) {
  if (s.empty()) return "1";
  if (s.singleton()) return "|.|^" + s.a.str();
  return render_segment_dsl(s, form);
}

std::string render_factor_pretty(const GLFactor& f) {
  switch (f.kind) {
    case GLFactor::Kind::Delta:
      return render_segment_pretty(f.seg, Form::Delta);
    case GLFactor::Kind::Zeta:
      return render_segment_pretty(f.seg, Form::Zeta);
    case GLFactor::Kind::LQ:
      if (f.seg.empty()) return render_segment_pretty(*f.lq_delta, Form::Delta);
      if (f.lq_delta->empty()) return render_segment_pretty(f.seg, Form::Zeta);
      return "L";
  }
  return "?";
}

std::string render_factors_pretty(const std::vector<GLFactor>& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (f.kind != GLFactor::Kind::LQ && f.seg.empty()) continue;
    if (!out.empty()) out += " x ";
    out += render_factor_pretty(f);
  }
  return out.empty() ? "1" : out;
}

std::string render_token_pretty(const TemperedToken& t) {
  switch (t.kind()) {
    case TemperedToken::Kind::Atom:
      return t.label();
    case TemperedToken::Kind::Lift:
      return "theta_" + std::to_string(t.level()) + "(" +
             render_token_pretty(t.inner()) + ")";
    case TemperedToken::Kind::StWrap:
      return "L(St_" + std::to_string(t.st_dim()) + " nu^1/2; " +
             render_token_pretty(t.inner()) + ")";
    case TemperedToken::Kind::SigmaOf:
      return "sigma(" + render_token_pretty(t.inner()) + ")";
  }
  return "?";
}

std::string render_module_dsl(const StandardModule& m) {
  if (m.tempered.kind() != TemperedToken::Kind::Atom)
    throw unsupported_form_error(
        "only modules with an atomic tempered part have a DSL form");
  std::string out = "pair=";
  out += m.pair == DualPair::SpOeven ? "SpO" : "MpO";
  out += ";";
  if (m.side == Side::V) out += " side=V;";
  if (!m.xi.empty()) {
    out += " ";
    for (size_t i = 0; i < m.xi.size(); ++i) {
      if (i) out += " x ";
      out += m.xi[i];
    }
    out += ";";
  }
  out += " ";
  for (size_t i = 0; i < m.block.factors.size(); ++i) {
    if (i) out += " x ";
    const GLFactor& f = m.block.factors[i];
    out += render_segment_dsl(f.seg,
                              f.kind == GLFactor::Kind::Zeta ? Form::Zeta
                                                             : Form::Delta);
  }
  if (!m.block.factors.empty()) out += " ";
  out += "; tau(l=" + std::to_string(m.tempered.atom_l_down());
  if (!m.tempered.mult().empty()) {
    out += ", m={";
    bool first = true;
    for (const auto& [dim, count] : m.tempered.mult()) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(dim) + ":" + std::to_string(count);
    }
    out += "}";
  }
  if (m.n) out += ", n=" + std::to_string(*m.n);
  out += ")";
  return out;
}

static std::string twist_prefix(Side side) {
  return side == Side::W ? "chi_V" : "chi_W";
}

std::string render_module_pretty(const StandardModule& m) {
  std::string out = "[" + twist_prefix(m.side) + "] ";
  for (const auto& x : m.xi) out += x + " x ";
  out += render_factors_pretty(m.block.factors);
  out += " ; " + render_token_pretty(m.tempered);
  return out;
}

std::string render_rearranged_pretty(const Rearranged& r,
                                     const TemperedToken& tau) {
  return render_factors_pretty(r.factors()) + " ; " +
         render_token_pretty(tau);
}

std::string render_trace(const AlgTrace& trace, const TemperedToken& tau) {
  std::ostringstream os;
  std::string tau_str = " ; " + render_token_pretty(tau);
  auto state = [&](const std::vector<GLFactor>& fs) {
    return render_factors_pretty(fs) + tau_str;
  };
  os << "input: " << state(trace.input) << "\n";
  if (!trace.initial) {
    os << "k = " << trace.k.str() << "; no segment ends in k\n";
    os << "output: " << state(trace.output) << "\n";
    return os.str();
  }
  os << "k = " << trace.k.str() << "; shortest segment ending in k: ["
     << trace.initial->a.str() << "," << trace.initial->b.str() << "]\n";
  std::string prev = state(trace.input);
  int n = 0;
  for (const auto& it : trace.iterations) {
    os << "iteration " << ++n << "\n";
    std::string l_desc;
    if (it.l_factor.seg.empty())
      l_desc = render_factor_pretty(it.l_factor);
    else
      l_desc = "L(" +
               render_segment_pretty(it.l_factor.seg, Form::Zeta) + " x " +
               render_segment_pretty(*it.l_factor.lq_delta, Form::Delta) + ")";
    os << "5: L = " << l_desc << "\n";
    const std::vector<GLFactor>* states[4] = {&it.after6, &it.after7,
                                              &it.after8, &it.after9};
    for (int line = 0; line < 4; ++line) {
      std::string cur = state(*states[line]);
      if (cur == prev) {
        os << line + 6 << ": nothing happens\n";
      } else {
        os << line + 6 << ": " << cur << "\n";
        prev = cur;
      }
    }
    if (it.next_aeb) {
      os << "10: a = " << (*it.next_aeb)[0].str()
         << ", e = " << (*it.next_aeb)[1].str()
         << ", b = " << (*it.next_aeb)[2].str() << "\n";
    } else {
      os << "10: exit\n";
    }
  }
  os << "output: " << state(trace.output) << "\n";
  return os.str();
}

std::string render_occurrence_pretty(const OccurrenceReport& rep) {
  std::ostringstream os;
  os << "f = " << rep.f << "\n";
  os << "l_down = " << rep.l_down << ", l_up = " << rep.l_up << "\n";
  if (rep.m_down)
    os << "m_down = " << *rep.m_down << ", m_up = " << *rep.m_up << "\n";
  os << "witness:";
  if (rep.witness.empty()) os << " (none)";
  for (const auto& s : rep.witness)
    os << " [" << s.a.str() << "," << s.b.str() << "]";
  os << "\n";
  return os.str();
}

std::string render_lift_pretty(const LiftResult& r) {
  if (r.zero) return "Zero";
  const StandardModule& m = *r.module;
  std::string out = "Z? none; ";
  for (const auto& x : m.xi) out += x + " x ";
  out += render_factors_pretty(m.block.factors);
  out += " ; " + render_token_pretty(m.tempered);
  return out;
}

std::string render_word(const GLWord& w) {
  if (w.is_one()) return "1";
  std::string out;
  for (const auto& [form, seg] : w.factors) {
    if (!out.empty()) out += " x ";
    out += render_segment_dsl(seg, form);
  }
  return out;
}

std::string render_ring_element(const RingElement& e) {
  if (e.terms().empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [t, c] : e.terms()) {
    os << c.str() << " * " << render_word(t.left) << " (x) ";
    switch (t.right.kind) {
      case Tail::Kind::Plain:
        os << render_word(t.right.word);
        break;
      case Tail::Kind::TauHat:
        if (!t.right.word.is_one()) os << render_word(t.right.word) << " x ";
        os << "tau^";
        break;
      case Tail::Kind::Bottom:
        os << "_|_";
        break;
    }
    os << "\n";
  }
  return os.str();
}

// ---- JSON ---------------------------------------------------------------

static json segment_json(const Segment& s, Form form) {
  return json{{"a", s.a.str()},
              {"b", s.b.str()},
              {"form", form == Form::Delta ? "D" : "Z"}};
}

static json block_json(const AlphaBlock& b) {
  json arr = json::array();
  for (const auto& f : b.factors)
    arr.push_back(segment_json(
        f.seg, f.kind == GLFactor::Kind::Zeta ? Form::Zeta : Form::Delta));
  return arr;
}

static json token_json(const TemperedToken& t) {
  switch (t.kind()) {
    case TemperedToken::Kind::Atom: {
      json mult = json::object();
      for (const auto& [dim, count] : t.mult())
        mult[std::to_string(dim)] = count;
      return json{{"kind", "atom"},
                  {"label", t.label()},
                  {"l", t.atom_l_down()},
                  {"mult", mult},
                  {"side", t.atom_side() == Side::W ? "W" : "V"}};
    }
    case TemperedToken::Kind::Lift:
      return json{{"kind", "lift"},
                  {"level", t.level()},
                  {"inner", token_json(t.inner())}};
    case TemperedToken::Kind::StWrap:
      return json{{"kind", "st_wrap"},
                  {"dim", t.st_dim()},
                  {"inner", token_json(t.inner())}};
    case TemperedToken::Kind::SigmaOf:
      return json{{"kind", "sigma_of"}, {"inner", token_json(t.inner())}};
  }
  return {};
}

static json module_json_obj(const StandardModule& m) {
  json j{{"pair", m.pair == DualPair::SpOeven ? "SpO" : "MpO"},
         {"side", m.side == Side::W ? "W" : "V"},
         {"xi", m.xi},
         {"alpha", m.block.alpha.str()},
         {"block", block_json(m.block)},
         {"tempered", token_json(m.tempered)},
         {"epsilon", m.epsilon}};
  if (m.n) j["n"] = *m.n;
  return j;
}

std::string render_module_json(const StandardModule& m) {
  json j = module_json_obj(m);
  j["schema"] = "module/1";
  return j.dump(2);
}

std::string render_rearranged_json(const Rearranged& r) {
  json j{{"schema", "rearranged/1"},
         {"k", r.k.str()},
         {"iterations", r.iterations}};
  json pre = json::array(), suf = json::array();
  for (const auto& s : r.prefix) pre.push_back(segment_json(s, Form::Delta));
  for (const auto& s : r.suffix) suf.push_back(segment_json(s, Form::Delta));
  j["prefix"] = pre;
  j["suffix"] = suf;
  if (!r.zeta.empty()) j["zeta"] = segment_json(r.zeta, Form::Zeta);
  return j.dump(2);
}

std::string render_occurrence_json(const OccurrenceReport& rep) {
  json j{{"schema", "occurrence/1"},
         {"f", rep.f},
         {"l_down", rep.l_down},
         {"l_up", rep.l_up},
         {"conservation", json{{"l_down", rep.l_down}, {"l_up", rep.l_up}}}};
  if (rep.m_down) {
    j["m_down"] = *rep.m_down;
    j["m_up"] = *rep.m_up;
  }
  json wit = json::array();
  for (const auto& s : rep.witness) wit.push_back(segment_json(s, Form::Delta));
  j["witness"] = wit;
  return j.dump(2);
}

std::string render_lift_json(const LiftResult& r) {
  json j{{"schema", "lift/1"},
         {"tower", r.tower == Tower::Down ? "down" : "up"},
         {"level", r.level},
         {"zero", r.zero}};
  if (!r.zero) {
    const StandardModule& m = *r.module;
    j["side"] = m.side == Side::W ? "W" : "V";
    j["block"] = block_json(m.block);
    j["tempered"] = token_json(m.tempered);
    j["xi"] = m.xi;
    if (m.n) j["target_dimension"] = *m.n;
  }
  return j.dump(2);
}

}  // namespace theta
