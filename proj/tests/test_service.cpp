#include <doctest.h>

#include <json.hpp>

#include "service_fixture.hpp"

using namespace frecency;
using nlohmann::json;

TEST_CASE("handlers return 503 before a snapshot is loaded") {
    Service service;
    CHECK(service.predict(std::nullopt, std::nullopt).status == 503);
    CHECK(service.classify(R"({"urls":["x"]})").status == 503);
    CHECK(service.recommendations(std::nullopt).status == 503);
}

TEST_CASE("predict endpoint") {
    Service service;
    service.load(fixtures::make_test_snapshot());

    auto r = service.predict(std::string("loc"), std::nullopt);
    CHECK(r.status == 200);
    auto body = json::parse(r.body);
    CHECK(body["query"] == "loc");
    REQUIRE(body["links"].size() == 3);
    CHECK(body["links"][0]["url"] == "http://localhost/phpmyadmin/");
    CHECK(body["links"][0]["visit_count"] == 16);
    CHECK(body["links"][0]["frecency"] == 2906.7627);
    CHECK(body["links"][1]["url"] == "http://localhost:8888/tree");
    CHECK(body["links"][2]["url"] == "http://localhost:8000/home");

    r = service.predict(std::string(""), std::string("2"));
    body = json::parse(r.body);
    REQUIRE(body["links"].size() == 2);
    CHECK(body["links"][0]["url"] == "https://web.facebook.com/");

    CHECK(json::parse(service.predict(std::nullopt, std::nullopt).body)["links"].size() == 10);
    CHECK(json::parse(service.predict(std::nullopt, std::string("100")).body)["links"].size() == 10);
    CHECK(service.predict(std::string("loc"), std::string("abc")).status == 400);
    CHECK(service.predict(std::string("loc"), std::string("0")).status == 400);
    CHECK(service.predict(std::string("loc"), std::string("2.5")).status == 400);
}

TEST_CASE("classify endpoint") {
    Service service;
    service.load(fixtures::make_test_snapshot());
    auto r = service.classify(R"({"urls":["game play"]})");
    CHECK(r.status == 200);
    const auto body = json::parse(r.body);
    REQUIRE(body["results"].size() == 1);
    CHECK(body["results"][0]["url"] == "game play");
    CHECK(body["results"][0]["category"] == "Games");
    CHECK(body["results"][0]["scores"].contains("Games"));
    CHECK(body["results"][0]["scores"].contains("Computers"));

    CHECK(service.classify(R"({"urls":[]})").status == 422);
    CHECK(service.classify("{not json").status == 400);
    CHECK(service.classify(R"({"url":"x"})").status == 400);
    CHECK(service.classify(R"({"urls":[1]})").status == 400);
    CHECK(service.classify(R"(["x"])").status == 400);
}

TEST_CASE("recommendations endpoint") {
    Service service;
    service.load(fixtures::make_test_snapshot(fixtures::categorized_history()));
    auto body = json::parse(service.recommendations(std::nullopt).body);
    REQUIRE(body["ranking"].size() == 4);
    CHECK(body["ranking"][0]["category"] == "Computers");
    CHECK(body["ranking"][1]["category"] == "Arts");
    CHECK(body["ranking"][2]["category"] == "Business");
    CHECK(body["ranking"][3]["category"] == "Games");
    CHECK(body["recommendations"][0]["category"] == "Computers");
    CHECK(body["recommendations"][0]["urls"] ==
          json({"https://twitter.com", "https://bitbucket.org", "https://reddit.com"}));

    body = json::parse(service.recommendations(std::string("0")).body);
    CHECK(body["ranking"].size() == 4);
    for (const auto& rec : body["recommendations"]) CHECK(rec["urls"].empty());
    CHECK(service.recommendations(std::string("x")).status == 400);

    service.load(fixtures::make_test_snapshot({{"https://a.com", 3, 12.0, "Games"}}));
    body = json::parse(service.recommendations(std::nullopt).body);
    REQUIRE(body["ranking"].size() == 1);
    CHECK(body["ranking"][0]["probability"] == 1.0);
}

TEST_CASE("visited urls are excluded from recommendations") {
    auto history = fixtures::categorized_history();
    history.push_back({"https://twitter.com", 1, 5.0, "Computers"});
    Service service;
    service.load(fixtures::make_test_snapshot(history));
    const auto body = json::parse(service.recommendations(std::string("2")).body);
    CHECK(body["recommendations"][0]["urls"] == json({"https://bitbucket.org", "https://reddit.com"}));
}

TEST_CASE("HTTP surface") {
    Service service;
    fixtures::LiveServer server(service);
    auto client = server.client();

    auto res = client.Get("/api/predict?q=loc");
    REQUIRE(res);
    CHECK(res->status == 503);

    service.load(fixtures::make_test_snapshot());
    res = client.Get("/api/predict?q=loc&k=2");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("Content-Type") == "application/json");
    CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
    CHECK(json::parse(res->body)["links"].size() == 2);

    res = client.Get("/api/predict?k=abc");
    REQUIRE(res);
    CHECK(res->status == 400);
    CHECK(res->get_header_value("Content-Type") == "application/json");

    res = client.Post("/api/classify", R"({"urls":["game play","drive code"]})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    const auto body = json::parse(res->body);
    CHECK(body["results"][0]["category"] == "Games");
    CHECK(body["results"][1]["category"] == "Computers");

    res = client.Post("/api/classify", R"({"urls":[]})", "application/json");
    REQUIRE(res);
    CHECK(res->status == 422);

    res = client.Get("/api/recommendations?k=1");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");

    // Identical requests, identical bytes.
    const auto a = client.Get("/api/recommendations?k=2");
    const auto b = client.Get("/api/recommendations?k=2");
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->body == b->body);
}

TEST_CASE("score_history clamps negative predictions") {
    LinearModel negative{{-5, 0, 0, 0}, {0, 0, 0}, {1, 1, 1}};
    const std::vector<HistoryRecord> records = {{"http://game.com/play", 1, 2, 3, std::nullopt}};
    const auto mnb = train_classifier(fixtures::toy_corpus(), {1, 1, false}, 1.0);
    const auto scored = score_history(records, negative, mnb);
    REQUIRE(scored.size() == 1);
    CHECK(scored[0].frecency == 0.0);
    CHECK(scored[0].category == "Games");
    CHECK(scored[0].visit_count == 3);
}
