#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "placement/errors.hpp"
#include "placement/io.hpp"
#include "placement/play.hpp"
#include "placement/transform.hpp"

namespace placement::cli {

namespace {

Board resolve_board(const std::string& spec) {
  if (auto builtin = parse_builtin_board(spec)) return *builtin;
  std::ifstream in(spec);
  if (!in)
    raise(Errc::parse_error, "cannot read board '" + spec +
                                 "' (not a builtin name and not a readable file)");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return Board::parse(buffer.str());
}

EnumerationLimits resolve_limits(int cap_option) {
  int cap = 24;
  if (const char* env = std::getenv("PLACEMENT_COMPLEX_CAP")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      raise(Errc::parse_error,
            std::string("invalid PLACEMENT_COMPLEX_CAP value '") + env + "'");
    }
  }
  if (cap_option > 0) cap = cap_option;
  if (cap < 1) raise(Errc::invalid_size, "enumeration cap must be positive");
  return EnumerationLimits::with_board_cap(cap);
}

void print_complex_text(std::ostream& out, const SimplicialComplex& complex) {
  out << "vertices:";
  for (const Variable& v : complex.vertices().variables()) out << ' ' << v.str();
  out << '\n';
  out << "facets (" << complex.facets().size() << "):\n";
  for (const Monomial& f : complex.facets()) out << "  " << f.str() << '\n';
}

void print_complex(std::ostream& out, const SimplicialComplex& complex,
                   const std::string& format, const EnumerationLimits& limits) {
  if (format == "text")
    print_complex_text(out, complex);
  else if (format == "json")
    out << io::complex_to_json(complex, limits) << '\n';
  else if (format == "dot")
    out << io::complex_to_dot(complex);
  else
    raise(Errc::parse_error, "unknown format '" + format + "'");
}

void print_ideal(std::ostream& out, const char* label, const MonomialIdeal& ideal) {
  out << label << " (" << ideal.generators().size() << " generators):\n";
  for (const Monomial& g : ideal.generators()) out << "  " << g.str() << '\n';
}

int run_verify(std::ostream& out, const DualityReport& report) {
  auto word = [](bool ok) { return ok ? "OK" : "FAIL"; };
  out << "duality: " << word(report.legal_ideal_matches_facet_ideal) << ' '
      << word(report.illegal_ideal_matches_gamma_facet_ideal) << ' '
      << word(report.illegal_ideal_matches_sr_ideal) << '\n';
  for (const GeneratorMismatch& m : report.mismatches) {
    out << "clause " << m.clause << ":\n";
    if (!m.only_lhs.empty()) {
      out << "  only in lhs:";
      for (const Monomial& g : m.only_lhs) out << ' ' << g.str();
      out << '\n';
    }
    if (!m.only_rhs.empty()) {
      out << "  only in rhs:";
      for (const Monomial& g : m.only_rhs) out << ' ' << g.str();
      out << '\n';
    }
  }
  return report.all_ok() ? 0 : 1;
}

int run_replay(std::ostream& out, const std::shared_ptr<const Ruleset>& rules,
               const Board& board, const std::string& arena_name,
               const std::string& moves_text, const EnumerationLimits& limits) {
  std::shared_ptr<const Arena> arena;
  if (arena_name == "board") {
    arena = make_board_arena(rules, board);
  } else if (arena_name == "legal") {
    arena = make_legal_complex_arena(legal_complex(rules, board, limits));
  } else if (arena_name == "illegal") {
    arena = make_illegal_complex_arena(illegal_complex(rules, board, limits));
  } else {
    raise(Errc::parse_error,
          "unknown arena '" + arena_name + "' (board, legal, illegal)");
  }
  MatchState state(arena);
  for (const Move& move : parse_move_sequence(moves_text)) {
    std::string token =
        std::string(move.first == Player::Left ? "L:" : "R:") + move.second.str();
    try {
      state = apply_move(state, move.first, move.second);
    } catch (const Error& e) {
      if (e.code() != Errc::illegal_move) throw;
      out << "rejected " << token << ": " << e.what() << '\n';
      return 1;
    }
    out << "ok " << token << '\n';
  }
  out << "position: " << state.occupied().str() << '\n';
  return 0;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{
      "Transforms placement games on graph boards into simplicial complexes "
      "and square-free monomial ideals."};
  app.name("placement-complex");
  app.require_subcommand(1);

  std::string game, board_spec, game2, board2_spec;
  std::string format = "text";
  std::string arena = "board";
  std::string moves;
  int cap = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_game = true) {
    if (needs_game)
      cmd->add_option("--game", game, "ruleset name or custom:<file>")->required();
    cmd->add_option("--board", board_spec,
                    "board: path:N, cycle:N, grid:RxC, or a file")
        ->required();
    cmd->add_option("--cap", cap, "enumeration cap (board vertices)");
  };

  auto* cmd_complex = app.add_subcommand("complex", "legal complex of a game");
  add_common(cmd_complex);
  cmd_complex->add_option("--format", format, "text, json or dot");

  auto* cmd_illegal = app.add_subcommand("illegal", "illegal complex of a game");
  add_common(cmd_illegal);
  cmd_illegal->add_option("--format", format, "text, json or dot");

  auto* cmd_ideals = app.add_subcommand("ideals", "legal and illegal ideals");
  add_common(cmd_ideals);

  auto* cmd_poly = app.add_subcommand("poly", "game polynomial");
  add_common(cmd_poly);

  auto* cmd_verify =
      app.add_subcommand("verify", "check the three ideal identities");
  add_common(cmd_verify);

  auto* cmd_strong =
      app.add_subcommand("check-strong", "exhaustive hereditary-legality check");
  add_common(cmd_strong);

  auto* cmd_iso =
      app.add_subcommand("iso", "compare two legal complexes up to isomorphism");
  add_common(cmd_iso);
  cmd_iso->add_option("--game2", game2, "second ruleset")->required();
  cmd_iso->add_option("--board2", board2_spec, "second board")->required();

  auto* cmd_replay = app.add_subcommand("replay", "replay a move sequence");
  add_common(cmd_replay);
  cmd_replay->add_option("--arena", arena, "board, legal or illegal");
  cmd_replay->add_option("--moves", moves, "sequence like \"L:x1 R:y3\"")
      ->required();

  auto* cmd_export = app.add_subcommand("export", "full JSON bundle of a game");
  add_common(cmd_export);
  cmd_export->add_option("--format", format, "json");

  try {
    app.parse(argc, argv);

    EnumerationLimits limits = resolve_limits(cap);

    if (app.got_subcommand(cmd_iso)) {
      auto delta_a = legal_complex(ruleset_by_name(game), resolve_board(board_spec),
                                   limits);
      auto delta_b = legal_complex(ruleset_by_name(game2),
                                   resolve_board(board2_spec), limits);
      IsomorphismResult result = are_isomorphic(delta_a, delta_b);
      if (!result.isomorphic) {
        out << "isomorphic: no\n";
        return 1;
      }
      out << "isomorphic: yes\nwitness:";
      for (const auto& [a, b] : result.witness)
        out << ' ' << a.str() << "->" << b.str();
      out << '\n';
      return 0;
    }

    auto rules = ruleset_by_name(game);
    Board board = resolve_board(board_spec);

    if (app.got_subcommand(cmd_complex)) {
      print_complex(out, legal_complex(rules, board, limits), format, limits);
      return 0;
    }
    if (app.got_subcommand(cmd_illegal)) {
      print_complex(out, illegal_complex(rules, board, limits), format, limits);
      return 0;
    }
    if (app.got_subcommand(cmd_ideals)) {
      auto analysis = analyze(rules, board, limits);
      print_ideal(out, "legal ideal", analysis->legal_ideal);
      print_ideal(out, "illegal ideal", analysis->illegal_ideal);
      return 0;
    }
    if (app.got_subcommand(cmd_poly)) {
      out << game_polynomial(rules, board, limits).str() << '\n';
      return 0;
    }
    if (app.got_subcommand(cmd_verify))
      return run_verify(out, verify_duality(rules, board, limits));
    if (app.got_subcommand(cmd_strong)) {
      StrongPlacementReport report = check_strong_placement(*rules, board, limits);
      if (report.hereditary) {
        out << "strong placement: yes\n";
        return 0;
      }
      out << "strong placement: no\n";
      out << "legal position " << report.legal_position->str()
          << " has illegal subposition " << report.illegal_subposition->str()
          << '\n';
      return 1;
    }
    if (app.got_subcommand(cmd_replay))
      return run_replay(out, rules, board, arena, moves, limits);
    if (app.got_subcommand(cmd_export)) {
      if (format != "json" && format != "text")
        raise(Errc::parse_error, "export emits JSON only");
      out << io::analysis_to_json(*analyze(rules, board, limits), limits) << '\n';
      return 0;
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    for (const CLI::App* sub : app.get_subcommands()) {
      out << sub->help();
      return 0;
    }
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace placement::cli
