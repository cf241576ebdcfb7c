import pytest


def pytest_collection_modifyitems(items):
    # Remember each acceptance criterion's label so the report hook can
    # print one PASS/FAIL line per criterion.
    for item in items:
        fn = getattr(item, "function", None)
        label = getattr(fn, "criterion_name", None)
        if label:
            item.user_properties.append(("criterion", label))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    for key, label in item.user_properties:
        if key == "criterion":
            verdict = "PASS" if report.passed else "FAIL"
            capman = item.config.pluginmanager.getplugin("capturemanager")
            line = "[%s] %s" % (verdict, label)
            if capman:
                with capman.global_and_fixture_disabled():
                    print("\n" + line)
            else:
                print(line)
