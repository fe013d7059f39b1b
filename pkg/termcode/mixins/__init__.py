# mixins module marker
