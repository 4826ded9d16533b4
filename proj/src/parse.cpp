#include <cctype>
#include <optional>

#include "presabs/syntax.hpp"

namespace presabs {
namespace {

bool is_prefix_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}
bool is_local_char(char c) { return is_prefix_char(c) || c == '+'; }

struct Token {
  enum class Kind { LParen, RParen, Equals, Ident, PName, IriRef, Literal, End };
  Kind kind = Kind::End;
  std::string text;    // Ident name, IriRef value (without <>), literal body
  std::string prefix;  // PName prefix part (may be empty)
  std::string local;   // PName local part (may be empty)
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.column = column_;
    if (eof()) {
      t.kind = Token::Kind::End;
      return t;
    }
    const char c = peek();
    if (c == '(') {
      advance();
      t.kind = Token::Kind::LParen;
      return t;
    }
    if (c == ')') {
      advance();
      t.kind = Token::Kind::RParen;
      return t;
    }
    if (c == '=') {
      advance();
      t.kind = Token::Kind::Equals;
      return t;
    }
    if (c == '<') return iri_ref(t);
    if (c == '"') return literal(t);
    if (c == ':' || std::isalnum(static_cast<unsigned char>(c)) || c == '_') return word(t);
    throw ParseError(line_, column_, std::string("unexpected character '") + c + "'");
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (!eof()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  Token iri_ref(Token t) {
    advance();  // '<'
    std::string value;
    while (!eof() && peek() != '>') {
      if (peek() == '\n') throw ParseError(t.line, t.column, "unterminated IRI reference");
      value += peek();
      advance();
    }
    if (eof()) throw ParseError(t.line, t.column, "unterminated IRI reference");
    advance();  // '>'
    if (value.empty()) throw ParseError(t.line, t.column, "empty IRI reference");
    t.kind = Token::Kind::IriRef;
    t.text = std::move(value);
    return t;
  }

  Token literal(Token t) {
    advance();  // '"'
    std::string value;
    while (!eof() && peek() != '"') {
      if (peek() == '\\') {
        advance();
        if (eof()) break;
      }
      value += peek();
      advance();
    }
    if (eof()) throw ParseError(t.line, t.column, "unterminated string literal");
    advance();  // closing '"'
    // Datatype / language tags are irrelevant here: literals only ever show
    // up in annotations we drop, so swallow any ^^<...> or @tag suffix.
    if (!eof() && peek() == '^') {
      advance();
      if (!eof() && peek() == '^') advance();
      if (!eof() && peek() == '<') {
        while (!eof() && peek() != '>') advance();
        if (!eof()) advance();
      }
    } else if (!eof() && peek() == '@') {
      while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) advance();
    }
    t.kind = Token::Kind::Literal;
    t.text = std::move(value);
    return t;
  }

  Token word(Token t) {
    std::string head;
    while (!eof() && is_prefix_char(peek())) {
      head += peek();
      advance();
    }
    if (!eof() && peek() == ':') {
      advance();
      std::string local;
      while (!eof() && is_local_char(peek())) {
        local += peek();
        advance();
      }
      t.kind = Token::Kind::PName;
      t.prefix = std::move(head);
      t.local = std::move(local);
      return t;
    }
    if (head.empty()) throw ParseError(t.line, t.column, "unexpected ':'");
    t.kind = Token::Kind::Ident;
    t.text = std::move(head);
    return t;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const PrefixMap* base, std::vector<std::string>* warnings)
      : lexer_(text), warnings_(warnings) {
    prefixes_ = base ? *base : builtin_prefixes();
    advance();
  }

  Ontology run() {
    Ontology onto;
    while (cur_.kind == Token::Kind::Ident && cur_.text == "Prefix") parse_prefix(onto);
    expect_ident("Ontology");
    expect(Token::Kind::LParen, "'('");
    if (cur_.kind == Token::Kind::IriRef) {
      onto.iri = Iri{cur_.text};
      advance();
    }
    while (cur_.kind != Token::Kind::RParen) {
      if (cur_.kind == Token::Kind::End)
        throw ParseError(cur_.line, cur_.column, "unexpected end of input inside Ontology(...)");
      parse_axiom(onto);
    }
    advance();  // ')'
    if (cur_.kind != Token::Kind::End)
      throw ParseError(cur_.line, cur_.column, "trailing content after Ontology(...)");
    return onto;
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(cur_.line, cur_.column, std::string("expected ") + what);
    advance();
  }

  void expect_ident(const std::string& name) {
    if (cur_.kind != Token::Kind::Ident || cur_.text != name)
      throw ParseError(cur_.line, cur_.column, "expected '" + name + "'");
    advance();
  }

  void warn(const std::string& msg) {
    if (warnings_) warnings_->push_back(msg);
  }

  Iri resolve(const Token& t) const {
    auto it = prefixes_.find(t.prefix);
    if (it == prefixes_.end())
      throw ParseError(t.line, t.column, "unknown prefix '" + t.prefix + ":'");
    return Iri{it->second + t.local};
  }

  Iri parse_iri() {
    if (cur_.kind == Token::Kind::IriRef) {
      Iri iri{cur_.text};
      advance();
      return iri;
    }
    if (cur_.kind == Token::Kind::PName) {
      Iri iri = resolve(cur_);
      advance();
      return iri;
    }
    throw ParseError(cur_.line, cur_.column, "expected an IRI");
  }

  void parse_prefix(Ontology& onto) {
    advance();  // Prefix
    expect(Token::Kind::LParen, "'('");
    if (cur_.kind != Token::Kind::PName)
      throw ParseError(cur_.line, cur_.column, "expected 'prefix:' in Prefix declaration");
    if (!cur_.local.empty())
      throw ParseError(cur_.line, cur_.column, "prefix name must end at ':'");
    const std::string name = cur_.prefix;
    advance();
    expect(Token::Kind::Equals, "'='");
    if (cur_.kind != Token::Kind::IriRef)
      throw ParseError(cur_.line, cur_.column, "expected <namespace> in Prefix declaration");
    const std::string ns = cur_.text;
    const int line = cur_.line, col = cur_.column;
    advance();
    expect(Token::Kind::RParen, "')'");
    auto it = onto.prefixes.find(name);
    if (it != onto.prefixes.end() && it->second != ns)
      throw ParseError(line, col, "prefix '" + name + ":' declared twice with different namespaces");
    onto.prefixes[name] = ns;
    prefixes_[name] = ns;
  }

  ExprPtr parse_expr() {
    if (cur_.kind == Token::Kind::IriRef || cur_.kind == Token::Kind::PName)
      return Expr::named(parse_iri());
    if (cur_.kind != Token::Kind::Ident)
      throw ParseError(cur_.line, cur_.column, "expected a class expression");
    const std::string head = cur_.text;
    const int line = cur_.line, col = cur_.column;
    advance();
    expect(Token::Kind::LParen, "'('");
    ExprPtr result;
    if (head == "ObjectIntersectionOf") {
      std::vector<ExprPtr> ops;
      while (cur_.kind != Token::Kind::RParen) ops.push_back(parse_expr());
      if (ops.size() < 2)
        throw ParseError(line, col, "ObjectIntersectionOf needs at least two operands");
      result = Expr::intersection(std::move(ops));
    } else if (head == "ObjectSomeValuesFrom") {
      Iri prop = parse_iri();
      ExprPtr filler = parse_expr();
      result = Expr::some(std::move(prop), std::move(filler));
    } else if (head == "ObjectHasValue") {
      Iri prop = parse_iri();
      Iri individual = parse_iri();
      result = Expr::has_value(std::move(prop), std::move(individual));
    } else if (head == "ObjectComplementOf") {
      result = Expr::complement(parse_expr());
    } else {
      throw ParseError(line, col, "unsupported construct '" + head + "'");
    }
    expect(Token::Kind::RParen, "')'");
    return result;
  }

  void parse_axiom(Ontology& onto) {
    if (cur_.kind != Token::Kind::Ident)
      throw ParseError(cur_.line, cur_.column, "expected an axiom");
    const std::string head = cur_.text;
    const int line = cur_.line, col = cur_.column;
    advance();
    expect(Token::Kind::LParen, "'('");
    if (head == "Declaration") {
      onto.axioms.push_back(parse_declaration());
    } else if (head == "SubClassOf") {
      ExprPtr sub = parse_expr();
      ExprPtr sup = parse_expr();
      onto.axioms.push_back(SubClassOfAx{std::move(sub), std::move(sup)});
    } else if (head == "EquivalentClasses") {
      ExprPtr a = parse_expr();
      ExprPtr b = parse_expr();
      if (cur_.kind != Token::Kind::RParen)
        throw ParseError(cur_.line, cur_.column, "EquivalentClasses supports exactly two operands");
      onto.axioms.push_back(make_equivalent(std::move(a), std::move(b)));
    } else if (head == "SubObjectPropertyOf") {
      parse_sub_property(onto, line, col);
    } else if (head == "InverseObjectProperties") {
      Iri p = parse_iri();
      Iri q = parse_iri();
      onto.axioms.push_back(make_inverse(std::move(p), std::move(q)));
    } else if (head == "AnnotationAssertion") {
      Iri prop = parse_iri();
      Iri subject = parse_iri();
      if (cur_.kind == Token::Kind::Literal) {
        warn("line " + std::to_string(line) + ": dropped AnnotationAssertion(" + prop.value +
             ") with literal value");
        advance();
        expect(Token::Kind::RParen, "')'");
        return;
      }
      Iri target = parse_iri();
      onto.axioms.push_back(AnnotationAssertionAx{std::move(prop), std::move(subject), std::move(target)});
    } else {
      throw ParseError(line, col, "unsupported construct '" + head + "'");
    }
    expect(Token::Kind::RParen, "')'");
  }

  Axiom parse_declaration() {
    if (cur_.kind != Token::Kind::Ident)
      throw ParseError(cur_.line, cur_.column, "expected entity kind in Declaration");
    const std::string kind = cur_.text;
    const int line = cur_.line, col = cur_.column;
    advance();
    expect(Token::Kind::LParen, "'('");
    Iri iri = parse_iri();
    expect(Token::Kind::RParen, "')'");
    DeclKind dk;
    if (kind == "Class") {
      dk = DeclKind::Class;
    } else if (kind == "ObjectProperty" || kind == "AnnotationProperty") {
      dk = DeclKind::Property;
    } else if (kind == "NamedIndividual") {
      dk = DeclKind::Individual;
    } else {
      throw ParseError(line, col, "unsupported construct '" + kind + "'");
    }
    return DeclarationAx{dk, std::move(iri)};
  }

  void parse_sub_property(Ontology& onto, int line, int col) {
    if (cur_.kind == Token::Kind::Ident && cur_.text == "ObjectPropertyChain") {
      advance();
      expect(Token::Kind::LParen, "'('");
      std::vector<Iri> chain;
      while (cur_.kind != Token::Kind::RParen) chain.push_back(parse_iri());
      advance();  // ')'
      if (chain.size() != 2)
        throw ParseError(line, col,
                         "ObjectPropertyChain must have exactly 2 properties, found " +
                             std::to_string(chain.size()));
      Iri sup = parse_iri();
      onto.axioms.push_back(SubPropertyChainAx{std::move(chain[0]), std::move(chain[1]), std::move(sup)});
      return;
    }
    Iri sub = parse_iri();
    Iri sup = parse_iri();
    onto.axioms.push_back(SubPropertyOfAx{std::move(sub), std::move(sup)});
  }

  Lexer lexer_;
  Token cur_;
  PrefixMap prefixes_;
  std::vector<std::string>* warnings_;
};

}  // namespace

Ontology parse_ontology(std::string_view text, const PrefixMap* base_prefixes,
                        std::vector<std::string>* warnings) {
  return Parser(text, base_prefixes, warnings).run();
}

}  // namespace presabs
