#include "idealrank/service.hpp"

#include <fmt/format.h>
#include <httplib.h>

#include "idealrank/ingestion.hpp"
#include "idealrank/report_json.hpp"

namespace idealrank::service {

using nlohmann::json;

namespace {

Response error_response(const Error& e) {
    const int status = e.code() == ErrorCode::DegenerateProblem ? 422 : 400;
    json body = {{"error", to_string(e.code())}, {"violations", violations_to_json(e.violations())}};
    return {status, body.dump() + "\n"};
}

json parse_body(std::string_view body) {
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, fmt::format("byte {}", e.byte), e.what());
    }
}

EvaluateOptions read_options(const json& doc) {
    EvaluateOptions options;
    const auto it = doc.find("options");
    if (it == doc.end()) return options;
    if (!it->is_object()) throw Error(ErrorCode::SchemaError, "options", "expected an object");
    try {
        if (it->contains("ideal_mode")) options.ideal_mode = parse_ideal_mode(it->at("ideal_mode").get<std::string>());
        if (it->contains("distance")) options.distance = parse_distance_mode(it->at("distance").get<std::string>());
        if (it->contains("auto_normalize_weights"))
            options.auto_normalize_weights = it->at("auto_normalize_weights").get<bool>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, "options", e.what());
    }
    return options;
}

template <class Fn>
Response guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        return error_response(e);
    } catch (const json::exception& e) {
        return error_response(Error(ErrorCode::SchemaError, "$", e.what()));
    }
}

void reply(httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
}

Response method_not_allowed(std::string_view allow) {
    json body = {{"error", "MethodNotAllowed"},
                 {"violations", json::array({{{"code", "MethodNotAllowed"}, {"path", "method"},
                                               {"message", fmt::format("allowed: {}", allow)}}})}};
    return {405, body.dump() + "\n"};
}

}  // namespace

Response handle_rank(std::string_view body) {
    return guarded([&] {
        const json doc = parse_body(body);
        const DecisionProblem problem = problem_from_json(doc);
        const EvaluateOptions options = read_options(doc);
        bool include = false;
        if (doc.contains("include_intermediates")) include = doc.at("include_intermediates").get<bool>();
        const auto report = evaluate(problem, options);
        return Response{200, to_json(report, include).dump() + "\n"};
    });
}

Response handle_sweep(std::string_view body) {
    return guarded([&] {
        const json doc = parse_body(body);
        const DecisionProblem problem = problem_from_json(doc);
        const EvaluateOptions options = read_options(doc);
        if (!doc.contains("criterion") || !doc.at("criterion").is_string())
            throw Error(ErrorCode::SchemaError, "criterion", "expected a criterion name");
        if (!doc.contains("steps") || !doc.at("steps").is_number_integer())
            throw Error(ErrorCode::SchemaError, "steps", "expected an integer step count");
        const auto sweep = weight_sweep(problem, doc.at("criterion").get<std::string>(),
                                        doc.at("steps").get<int>(), options);
        return Response{200, to_json(sweep).dump() + "\n"};
    });
}

Response handle_health() {
    json body = {{"status", "ok"}, {"version", kEngineVersion}};
    return {200, body.dump() + "\n"};
}

void register_routes(httplib::Server& server) {
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});

    server.Get("/api/v1/health", [](const httplib::Request&, httplib::Response& res) {
        reply(res, handle_health());
    });
    server.Post("/api/v1/rank", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_rank(req.body));
    });
    server.Post("/api/v1/sweep", [](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_sweep(req.body));
    });

    const auto only = [](std::string allow) {
        return [allow](const httplib::Request&, httplib::Response& res) {
            res.set_header("Allow", allow);
            reply(res, method_not_allowed(allow));
        };
    };
    server.Post("/api/v1/health", only("GET"));
    server.Put("/api/v1/health", only("GET"));
    server.Delete("/api/v1/health", only("GET"));
    for (const char* path : {"/api/v1/rank", "/api/v1/sweep"}) {
        server.Get(path, only("POST"));
        server.Put(path, only("POST"));
        server.Delete(path, only("POST"));
    }
    server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

bool serve(const std::string& host, int port) {
    httplib::Server server;
    register_routes(server);
    return server.listen(host, port);
}

}  // namespace idealrank::service
