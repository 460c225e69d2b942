from infrastructure.config.settings import Settings, settings


class TestSettings:
    """Test configuration defaults and derived values."""

    def test_limits_are_consistent(self):
        assert 1 <= settings.DEFAULT_WITNESS_DEPTH <= settings.MAX_WITNESS_DEPTH
        assert 1 <= settings.DEFAULT_FUSION_STAGES <= settings.MAX_FUSION_STAGES
        assert settings.CORPUS_MAX_WORKERS >= 1
        assert 1 <= settings.CORPUS_WITNESS_DEPTH <= settings.MAX_WITNESS_DEPTH

    def test_cors_origins_list(self):
        config = Settings()
        config.CORS_ORIGINS = "http://a.test, http://b.test,"
        assert config.cors_origins_list == ["http://a.test", "http://b.test"]

    def test_is_development(self):
        config = Settings()
        config.ENVIRONMENT = "Dev"
        assert config.is_development
        config.ENVIRONMENT = "production"
        assert not config.is_development
