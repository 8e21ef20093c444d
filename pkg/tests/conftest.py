from hypothesis import settings

settings.register_profile("wilfkit", deadline=None, max_examples=100)
settings.load_profile("wilfkit")
